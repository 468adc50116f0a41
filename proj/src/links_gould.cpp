#include "lgbridge/links_gould.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace lgbridge {

namespace {

// Entries below are 1-based (row, column) as printed.
template <class Scalar>
void put(DenseMatrix<Scalar>& m, int row, int col, Scalar value) {
  m(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1)) = std::move(value);
}

ExtScalar ext(LaurentHalf2 base, LaurentHalf2 ycoef = {}) { return {std::move(base), std::move(ycoef)}; }

}  // namespace

DenseMatrix<ExtScalar> r_lg21_matrix() {
  DenseMatrix<ExtScalar> m(16, 16);
  const LaurentHalf2 one(1);
  const LaurentHalf2 s = t2_pow(1, 1);  // t0^{1/2} t1^{1/2}
  const LaurentHalf2 y2 = ExtScalar::y_squared();

  put(m, 1, 1, ext(-t2_pow(2, 0)));
  put(m, 2, 5, ext(-t2_pow(1, 0)));
  put(m, 3, 9, ext(-t2_pow(1, 0)));
  put(m, 4, 13, ext(-one));
  put(m, 5, 2, ext(-t2_pow(1, 0)));
  put(m, 5, 5, ext(one - t2_pow(2, 0)));
  put(m, 6, 6, ext(one));
  put(m, 7, 7, ext(one - t2_pow(2, 2)));
  put(m, 7, 10, ext(s));
  put(m, 7, 13, ext({}, s));
  put(m, 8, 14, ext(-t2_pow(0, 1)));
  put(m, 9, 3, ext(-t2_pow(1, 0)));
  put(m, 9, 9, ext(one - t2_pow(2, 0)));
  put(m, 10, 7, ext(s));
  put(m, 10, 13, ext({}, -one));
  put(m, 11, 11, ext(one));
  put(m, 12, 15, ext(-t2_pow(0, 1)));
  put(m, 13, 4, ext(-one));
  put(m, 13, 7, ext({}, s));
  put(m, 13, 10, ext({}, -one));
  put(m, 13, 13, ext(-y2));
  put(m, 14, 8, ext(-t2_pow(0, 1)));
  put(m, 14, 14, ext(one - t2_pow(0, 2)));
  put(m, 15, 12, ext(-t2_pow(0, 1)));
  put(m, 15, 15, ext(one - t2_pow(0, 2)));
  put(m, 16, 16, ext(-t2_pow(0, 2)));
  return m;
}

DenseMatrix<LaurentHalf> r_lg21_special_matrix() {
  const auto two = r_lg21_matrix();
  DenseMatrix<LaurentHalf> m(16, 16);
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c) m(r, c) = specialize(two(r, c), Specialization::kT1ToInvT0);
  return m;
}

DenseMatrix<LaurentHalf> s_lg31_matrix() {
  DenseMatrix<LaurentHalf> m(64, 64);
  const LaurentHalf one(1);
  const LaurentHalf y = t_pow(1) - t_pow(-1);
  const LaurentHalf y2 = y * y;
  const LaurentHalf y3 = y2 * y;
  auto idx = [](int a, int b) { return static_cast<std::size_t>((a - 1) * 8 + (b - 1)); };

  // e_i ⊗ e_i
  const std::array<LaurentHalf, 8> diag = {one, -t_pow(-2), -t_pow(-2), -t_pow(-2),
                                           t_pow(-4), t_pow(-4), t_pow(-4), -t_pow(-6)};
  for (int i = 1; i <= 8; ++i) m(idx(i, i), idx(i, i)) = diag[static_cast<std::size_t>(i - 1)];

  // Block on (a⊗b, b⊗a): [[0, t^{-1/2}], [t^{-1/2}, 1 - t^{-1}]].
  auto block2 = [&](int a, int b, const LaurentHalf& factor) {
    const std::size_t p = idx(a, b), q = idx(b, a);
    m(q, p) = factor * t_pow(-1);
    m(p, q) = factor * t_pow(-1);
    m(q, q) = factor * (one - t_pow(-2));
  };
  for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {1, 4}}) block2(a, b, one);
  for (auto [a, b] : {std::pair{7, 8}, {6, 8}, {5, 8}}) block2(a, b, t_pow(-4));
  for (auto [a, b] : {std::pair{2, 5}, {3, 5}, {2, 6}, {4, 6}, {3, 7}, {4, 7}}) block2(a, b, -t_pow(-2));

  // Anti-diagonal 4x4 block with Y corrections.
  using Basis4 = std::array<std::pair<int, int>, 4>;
  auto block4 = [&](const Basis4& basis, const LaurentHalf& factor) {
    const LaurentHalf zero;
    const std::array<std::array<LaurentHalf, 4>, 4> b = {{{zero, zero, zero, one},
                                                         {zero, zero, one, y},
                                                         {zero, one, zero, y},
                                                         {one, y, y, y2}}};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        if (!b[r][c].is_zero())
          m(idx(basis[r].first, basis[r].second), idx(basis[c].first, basis[c].second)) = factor * b[r][c];
  };
  block4({{{1, 5}, {2, 3}, {3, 2}, {5, 1}}}, t_pow(-2));
  block4({{{1, 6}, {2, 4}, {4, 2}, {6, 1}}}, t_pow(-2));
  block4({{{1, 7}, {3, 4}, {4, 3}, {7, 1}}}, t_pow(-2));
  block4({{{4, 8}, {6, 7}, {7, 6}, {8, 4}}}, -t_pow(-4));
  block4({{{3, 8}, {5, 7}, {7, 5}, {8, 3}}}, -t_pow(-4));
  block4({{{2, 8}, {5, 6}, {6, 5}, {8, 2}}}, -t_pow(-4));

  // The 8x8 block on the pairs summing to 9.
  const std::array<std::pair<int, int>, 8> basis8 = {
      {{1, 8}, {4, 5}, {3, 6}, {2, 7}, {7, 2}, {6, 3}, {5, 4}, {8, 1}}};
  std::array<std::array<LaurentHalf, 8>, 8> b8{};
  for (std::size_t k = 0; k < 8; ++k) b8[k][7 - k] = one;
  for (std::size_t k = 1; k <= 3; ++k) b8[k][7] = b8[7][k] = y;
  for (std::size_t r = 4; r <= 6; ++r)
    for (std::size_t c = 4; c <= 6; ++c)
      if (r != c) b8[r][c] = y;
  for (std::size_t k = 4; k <= 6; ++k) b8[k][7] = b8[7][k] = y2;
  b8[7][7] = y3;
  const LaurentHalf f8 = t_pow(-3);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      if (!b8[r][c].is_zero())
        m(idx(basis8[r].first, basis8[r].second), idx(basis8[c].first, basis8[c].second)) = f8 * b8[r][c];
  return m;
}

const LocalOperator<ExtScalar>& r_lg21() {
  static const LocalOperator<ExtScalar> op(4, r_lg21_matrix());
  return op;
}

const LocalOperator<LaurentHalf>& r_lg21_special() {
  static const LocalOperator<LaurentHalf> op(4, r_lg21_special_matrix());
  return op;
}

const LocalOperator<LaurentHalf>& s_lg31() {
  static const LocalOperator<LaurentHalf> op(8, s_lg31_matrix());
  return op;
}

std::vector<ExtScalar> mu21() {
  return {ExtScalar(t2_pow(-2, 0)), ExtScalar(-t2_pow(0, 2)), ExtScalar(-t2_pow(-2, 0)),
          ExtScalar(t2_pow(0, 2))};
}

std::vector<LaurentHalf> mu21_special() {
  std::vector<LaurentHalf> out;
  for (const auto& x : mu21()) out.push_back(specialize(x, Specialization::kT1ToInvT0));
  return out;
}

std::vector<LaurentHalf> mu31() {
  const std::array<int, 8> signs = {1, -1, -1, -1, 1, 1, 1, -1};
  std::vector<LaurentHalf> out;
  for (int s : signs) out.push_back(t_pow(3, Rational(s)));
  return out;
}

ExtScalar lg21_two_variable(const BraidWord& b) { return lg21_two_variable(b, r_lg21()); }

ExtScalar lg21_two_variable(const BraidWord& b, const LocalOperator<ExtScalar>& op) {
  return weighted_trace(b, op, mu21()) * ExtScalar(LaurentHalf2(Rational(1, 4)));
}

const LocalOperator<LaurentHalf>& lg_operator(LgFlavor flavor) {
  return flavor == LgFlavor::kLg21Special ? r_lg21_special() : s_lg31();
}

std::vector<LaurentHalf> lg_weight(LgFlavor flavor) {
  return flavor == LgFlavor::kLg21Special ? mu21_special() : mu31();
}

LaurentHalf lg_invariant(const BraidWord& b, LgFlavor flavor) {
  return lg_invariant(b, flavor, lg_operator(flavor));
}

LaurentHalf lg_invariant(const BraidWord& b, LgFlavor flavor, const LocalOperator<LaurentHalf>& op) {
  const int d = flavor == LgFlavor::kLg21Special ? 4 : 8;
  if (op.site_dim() != d) throw std::invalid_argument("lg_invariant: operator has the wrong site dimension");
  return weighted_trace(b, op, lg_weight(flavor)).scaled(Rational(1, d));
}

}  // namespace lgbridge
