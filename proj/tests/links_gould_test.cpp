#include <gtest/gtest.h>

#include "printers.hpp"

#include <complex>
#include <random>

#include "lgbridge/burau.hpp"
#include "lgbridge/links_gould.hpp"
#include "oracle.hpp"

namespace {

using namespace lgbridge;
using oracle::t;

oracle::Matrix to_oracle(const DenseMatrix<LaurentHalf>& m) {
  oracle::Matrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = oracle::from_library(m(r, c));
  return out;
}

// The 16x16 matrix at t1 = 1/t0 as printed, rows/columns 1-based.
oracle::Matrix printed_special_r() {
  const oracle::Poly y = t(1) - t(-1);
  const oracle::Poly one = 1, minus_one = -1;
  const std::vector<std::tuple<int, int, oracle::Poly>> entries = {
      {1, 1, t(2, -1)},       {2, 5, t(1, -1)},         {3, 9, t(1, -1)},          {4, 13, minus_one},
      {5, 2, t(1, -1)},       {5, 5, one - t(2)},       {6, 6, one},               {7, 10, minus_one},
      {7, 13, minus_one * y}, {8, 14, t(-1)},           {9, 3, t(1, -1)},          {9, 9, one - t(2)},
      {10, 7, minus_one},     {10, 13, minus_one * y},  {11, 11, one},             {12, 15, t(-1)},
      {13, 4, minus_one},     {13, 7, minus_one * y},   {13, 10, minus_one * y},   {13, 13, minus_one * y * y},
      {14, 8, t(-1)},         {14, 14, one - t(-2)},    {15, 12, t(-1)},           {15, 15, one - t(-2)},
      {16, 16, t(-2, -1)},
  };
  oracle::Matrix m(16);
  for (const auto& [r, c, v] : entries) m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) = v;
  return m;
}

template <class Scalar>
using Vec = SparseVector<Scalar>;

Vec<LaurentHalf> random_vector(std::mt19937_64& rng, int d, int n) {
  std::uniform_int_distribution<int> coef(-3, 3), exp(-2, 2);
  std::vector<Vec<LaurentHalf>::Entry> entries;
  const BasisCode total = basis_size(d, n);
  for (BasisCode c = 0; c < total; ++c)
    if (rng() % 3 == 0) entries.emplace_back(c, t_pow(exp(rng), coef(rng)));
  return Vec<LaurentHalf>::from_entries(d, n, std::move(entries));
}

TEST(LinksGouldRTest, TwoVariableCornerEntry) {
  const auto& m = r_lg21().matrix();
  EXPECT_EQ(m(0, 0), ExtScalar(t2_pow(2, 0, -1)));
  EXPECT_EQ(m(15, 15), ExtScalar(t2_pow(0, 2, -1)));
  EXPECT_EQ(m(6, 6), ExtScalar(LaurentHalf2(1) - t2_pow(2, 2)));
  EXPECT_EQ(m(12, 12), -ExtScalar(ExtScalar::y_squared()));
  EXPECT_EQ(m(6, 12), ExtScalar({}, t2_pow(1, 1)));
}

TEST(LinksGouldRTest, SpecializationMatchesPrintedMatrix) {
  const auto printed = printed_special_r();
  const auto& two_var = r_lg21().matrix();
  const auto& special = r_lg21_special().matrix();
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c) {
      EXPECT_TRUE(oracle::same(specialize(two_var(r, c), Specialization::kT1ToInvT0), printed(r, c)))
          << "entry " << r + 1 << "," << c + 1;
      EXPECT_TRUE(oracle::same(special(r, c), printed(r, c))) << "entry " << r + 1 << "," << c + 1;
    }
}

TEST(LinksGouldRTest, Weights) {
  const auto mu = mu21();
  EXPECT_EQ(mu[0], ExtScalar(t2_pow(-2, 0)));
  EXPECT_EQ(mu[1], ExtScalar(t2_pow(0, 2, -1)));
  ExtScalar sum;
  for (const auto& x : mu) sum += x;
  EXPECT_TRUE(sum.is_zero());
  const auto mu31w = mu31();
  ASSERT_EQ(mu31w.size(), 8u);
  EXPECT_EQ(mu31w[0], t_pow(3));
  EXPECT_EQ(mu31w[7], t_pow(3, -1));
  const auto special = mu21_special();
  EXPECT_EQ(special[1], t_pow(-2, -1));
  EXPECT_EQ(special[3], t_pow(-2));
}

TEST(LinksGouldRTest, SEntries) {
  const auto& s = s_lg31().matrix();
  EXPECT_EQ(s(0, 0), LaurentHalf(1));
  EXPECT_EQ(s(63, 63), t_pow(-6, -1));
  // e1⊗e2 is code 1, e2⊗e1 is code 8
  EXPECT_TRUE(s(1, 1).is_zero());
  EXPECT_EQ(s(1, 8), t_pow(-1));
  EXPECT_EQ(s(8, 1), t_pow(-1));
  EXPECT_EQ(s(8, 8), LaurentHalf(1) - t_pow(-2));
}

TEST(LinksGouldYangBaxterTest, SpecialDense) {
  const auto r = printed_special_r();
  const auto id = oracle::Matrix::identity(4);
  const auto a = oracle::kron(r, id), b = oracle::kron(id, r);
  EXPECT_TRUE(a * b * a == b * a * b);
  EXPECT_FALSE(yang_baxter_violation(r_lg21_special()).has_value());
}

TEST(LinksGouldYangBaxterTest, SDense) {
  const auto s = to_oracle(s_lg31().matrix());
  const auto id = oracle::Matrix::identity(8);
  const auto a = oracle::kron(s, id), b = oracle::kron(id, s);
  EXPECT_TRUE(a * b * a == b * a * b);
  EXPECT_FALSE(yang_baxter_violation(s_lg31()).has_value());
}

TEST(LinksGouldYangBaxterTest, TwoVariableExactAndNumeric) {
  EXPECT_FALSE(yang_baxter_violation(r_lg21()).has_value());
  EvalPoint at;
  at.t0 = {1.3, 0.4};
  at.t1 = {0.6, -0.9};
  at.y = std::sqrt((at.t0 - 1.0) * (1.0 - at.t1));
  using C = std::complex<double>;
  const auto& m = r_lg21().matrix();
  std::vector<C> r(256);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) r[i * 16 + j] = evaluate_numeric(m(i, j), at);
  // dense 64x64 products, indices (a, b, c) base 4
  auto left = [&](std::size_t row, std::size_t col) {  // R ⊗ id
    return row % 4 == col % 4 ? r[(row / 4) * 16 + col / 4] : C{};
  };
  auto right = [&](std::size_t row, std::size_t col) {  // id ⊗ R
    return row / 16 == col / 16 ? r[(row % 16) * 16 + col % 16] : C{};
  };
  auto product = [](auto f, auto g, auto h) {
    std::vector<C> fg(4096), out(4096);
    for (std::size_t i = 0; i < 64; ++i)
      for (std::size_t k = 0; k < 64; ++k)
        for (std::size_t j = 0; j < 64; ++j) fg[i * 64 + j] += f(i, k) * g(k, j);
    for (std::size_t i = 0; i < 64; ++i)
      for (std::size_t k = 0; k < 64; ++k)
        for (std::size_t j = 0; j < 64; ++j) out[i * 64 + j] += fg[i * 64 + k] * h(k, j);
    return out;
  };
  const auto lhs = product(left, right, left), rhs = product(right, left, right);
  double worst = 0;
  for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
  EXPECT_LT(worst, 1e-9);
}

TEST(ApplyWordTest, EmptyWordAndInverse) {
  std::mt19937_64 rng(2);
  const auto v = random_vector(rng, 4, 3);
  EXPECT_EQ(apply_word(BraidWord(3), r_lg21_special(), v), v);
  for (int i = 1; i <= 2; ++i) {
    EXPECT_EQ(apply_word(BraidWord(3, {{i, 1}, {i, -1}}), r_lg21_special(), v), v);
    EXPECT_EQ(apply_word(BraidWord(3, {{i, -1}, {i, 1}}), r_lg21_special(), v), v);
  }
  const auto w = random_vector(rng, 8, 2);
  EXPECT_EQ(apply_word(parse_braid("1 -1", 2), s_lg31(), w), w);
}

TEST(ApplyWordTest, BraidRelationOnRandomVectors) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 5; ++k) {
    const auto v = random_vector(rng, 4, 3);
    const auto lhs = apply_word(parse_braid("1 2 1", 3), r_lg21_special(), v);
    const auto rhs = apply_word(parse_braid("2 1 2", 3), r_lg21_special(), v);
    EXPECT_TRUE((lhs - rhs).is_zero_vector());
  }
  const auto v = random_vector(rng, 2, 4);
  EXPECT_EQ(apply_word(parse_braid("1 3", 4), r_small(SmallR::kR1), v),
            apply_word(parse_braid("3 1", 4), r_small(SmallR::kR1), v));
}

TEST(ApplyWordTest, MatchesDenseImage) {
  const auto r = printed_special_r();
  const auto image = oracle::braid_image(r, r, 4, 3, {1, 2, 2});
  const BraidWord b = parse_braid("1 2 2", 3);
  for (BasisCode col = 0; col < 64; col += 7) {
    const auto v = apply_word(b, r_lg21_special(), Vec<LaurentHalf>::basis(4, 3, col));
    for (BasisCode row = 0; row < 64; ++row) ASSERT_TRUE(oracle::same(v.coefficient(row), image(row, col)));
  }
}

TEST(LinksGouldInvariantTest, Unknot) {
  EXPECT_EQ(lg21_two_variable(BraidWord(1)), ExtScalar(1));
  EXPECT_EQ(lg_invariant(BraidWord(1), LgFlavor::kLg21Special), LaurentHalf(1));
  EXPECT_EQ(lg_invariant(BraidWord(1), LgFlavor::kLg31Special), LaurentHalf(1));
}

TEST(LinksGouldInvariantTest, TrefoilSpecialAgainstDenseTrace) {
  const auto r = printed_special_r();
  const auto image = oracle::braid_image(r, r, 4, 2, {1, 1, 1});
  const std::vector<oracle::Poly> mu = {t(-2), t(-2, -1), t(-2, -1), t(-2)};
  const auto expected = t(0, mpq_class(1, 4)) * oracle::weighted_trace(image, 4, 2, mu);
  const BraidWord b = parse_braid("1 1 1", 2);
  const auto value = lg_invariant(b, LgFlavor::kLg21Special);
  EXPECT_TRUE(oracle::same(value, expected));
  const auto delta = oracle::Poly(1) - t(2) + t(4);
  EXPECT_TRUE(oracle::equal_up_to_unit(expected, delta * delta));
}

TEST(LinksGouldInvariantTest, TrefoilLg31AgainstDenseTrace) {
  const auto s = to_oracle(s_lg31().matrix());
  const auto image = oracle::braid_image(s, s, 8, 2, {1, 1, 1});
  std::vector<oracle::Poly> mu;
  for (int sign : {1, -1, -1, -1, 1, 1, 1, -1}) mu.push_back(t(3, sign));
  const auto expected = t(0, mpq_class(1, 8)) * oracle::weighted_trace(image, 8, 2, mu);
  const auto value = lg_invariant(parse_braid("1 1 1", 2), LgFlavor::kLg31Special);
  EXPECT_TRUE(oracle::same(value, expected));
  const auto delta = oracle::Poly(1) - t(2) + t(4);
  EXPECT_TRUE(oracle::equal_up_to_unit(expected, delta * delta * delta));
}

TEST(LinksGouldInvariantTest, TwoVariableSpecializesToSpecialTrace) {
  for (const char* w : {"1 1 1", "1 -1 1", "1 1"}) {
    const BraidWord b = parse_braid(w, 2);
    EXPECT_EQ(specialize(lg21_two_variable(b), Specialization::kT1ToInvT0), lg_invariant(b, LgFlavor::kLg21Special));
  }
  const BraidWord fig8 = parse_braid("1 -2 1 -2", 3);
  EXPECT_EQ(specialize(lg21_two_variable(fig8), Specialization::kT1ToInvT0),
            lg_invariant(fig8, LgFlavor::kLg21Special));
}

// Reduction at t1 = 1 of the two-variable invariant of the trefoil. The
// trace as defined evaluates to -1 here (see the acceptance run).
TEST(LinksGouldInvariantTest, TwoVariableAtT1EqualsOneOnTrefoil) {
  const auto v = lg21_two_variable(parse_braid("1 1 1", 2));
  EXPECT_EQ(specialize(v, Specialization::kT1ToOne), LaurentHalf(1));
}

TEST(LinksGouldInvariantTest, StabilizationFlipsSign) {
  // Observed behaviour of the literal trace: one extra strand multiplies by -1.
  const BraidWord b = parse_braid("1 1 1", 2);
  const auto base = lg_invariant(b, LgFlavor::kLg21Special);
  EXPECT_EQ(lg_invariant(stabilize(b, 1), LgFlavor::kLg21Special), -base);
  EXPECT_EQ(lg_invariant(stabilize(b, -1), LgFlavor::kLg21Special), -base);
  EXPECT_EQ(lg21_two_variable(stabilize(b, 1)), -lg21_two_variable(b));
  const auto base31 = lg_invariant(b, LgFlavor::kLg31Special);
  EXPECT_EQ(lg_invariant(stabilize(b, 1), LgFlavor::kLg31Special), t_pow(3) * base31);
  EXPECT_EQ(lg_invariant(stabilize(b, -1), LgFlavor::kLg31Special), t_pow(9) * base31);
}

TEST(LinksGouldInvariantTest, PartialTraceIsScalar) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BraidWord b = random_word(seed, 3, 5);
    EXPECT_TRUE(partial_trace_scalar(b, r_lg21_special(), mu21_special()).is_scalar) << b.to_text();
  }
  EXPECT_TRUE(partial_trace_scalar(parse_braid("1 -2 1", 3), r_lg21(), mu21()).is_scalar);
}

}  // namespace
