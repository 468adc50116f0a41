#include "lgbridge/burau.hpp"

#include <stdexcept>
#include <utility>

namespace lgbridge {

namespace {

// 2x2 block as columns (image of the first basis vector, image of the second).
struct Block {
  LaurentHalf a00, a10, a01, a11;
};

Block generator_block(BurauVariant variant) {
  const LaurentHalf one(1);
  switch (variant) {
    case BurauVariant::kStandard:
      return {one - t_pow(2), t_pow(1), t_pow(1), LaurentHalf()};
    case BurauVariant::kF21:
      return {one - t_pow(-2), t_pow(-1), t_pow(-1), LaurentHalf()};
    case BurauVariant::kG21:
      return {LaurentHalf(), -t_pow(1), -t_pow(1), one - t_pow(2)};
    case BurauVariant::kFGH31:
      return {LaurentHalf(), t_pow(-1), t_pow(-1), one - t_pow(-2)};
  }
  throw std::invalid_argument("unknown Burau variant");
}

void check_index(int strands, int index) {
  if (index < 1 || index >= strands)
    throw std::out_of_range("generator index " + std::to_string(index) + " out of range for " +
                            std::to_string(strands) + " strands");
}

}  // namespace

PolyMatrix burau_generator(int strands, int index, BurauVariant variant) {
  check_index(strands, index);
  auto m = PolyMatrix::identity(static_cast<std::size_t>(strands));
  const Block blk = generator_block(variant);
  const auto i = static_cast<std::size_t>(index - 1);
  m(i, i) = blk.a00;
  m(i + 1, i) = blk.a10;
  m(i, i + 1) = blk.a01;
  m(i + 1, i + 1) = blk.a11;
  return m;
}

PolyMatrix burau_generator_inverse(int strands, int index, BurauVariant variant) {
  auto inv = invert_with_unit_pivots(burau_generator(strands, index, variant));
  if (!inv) throw std::logic_error("Burau generator without unit-pivot inverse");
  return std::move(*inv);
}

PolyMatrix burau_matrix(const BraidWord& b, BurauVariant variant) {
  auto m = PolyMatrix::identity(static_cast<std::size_t>(b.strands()));
  for (const Letter& l : b.letters())
    m = m * (l.sign > 0 ? burau_generator(b.strands(), l.index, variant)
                        : burau_generator_inverse(b.strands(), l.index, variant));
  return m;
}

std::vector<LaurentHalf> burau_fixed_vector(int strands) {
  std::vector<LaurentHalf> delta;
  for (int k = 1; k <= strands; ++k) delta.push_back(t_pow(-(strands - k)));
  return delta;
}

PolyMatrix reduced_burau(const BraidWord& b) {
  const int n = b.strands();
  if (n < 2) throw std::invalid_argument("reduced Burau needs at least two strands");
  const PolyMatrix full = burau_matrix(b, BurauVariant::kStandard);
  const auto m = static_cast<std::size_t>(n - 1);
  PolyMatrix out(m, m);
  // f_n = -sum_{k<n} t^{-(n-k)/2} f_k modulo delta_n.
  for (std::size_t c = 0; c < m; ++c) {
    const LaurentHalf& last = full(m, c);
    for (std::size_t r = 0; r < m; ++r) {
      out(r, c) = full(r, c);
      if (!last.is_zero()) out(r, c) -= last * t_pow(-(n - static_cast<int>(r) - 1));
    }
  }
  return out;
}

LaurentHalf determinant(const PolyMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return LaurentHalf(1);
  PolyMatrix m = input;
  LaurentHalf prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = LaurentHalf();
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

LaurentHalf alexander_det(const BraidWord& b) {
  const int n = b.strands();
  if (n == 1) return LaurentHalf(1);
  PolyMatrix shifted = PolyMatrix::identity(static_cast<std::size_t>(n - 1)) - reduced_burau(b);
  const LaurentHalf one(1);
  return exact_divide((one - t_pow(2)) * determinant(shifted), one - t_pow(2 * n));
}

namespace {

DenseMatrix<LaurentHalf> r1_matrix() {
  DenseMatrix<LaurentHalf> m(4, 4);
  m(0, 0) = LaurentHalf(1);
  m(1, 2) = t_pow(1);
  m(2, 1) = t_pow(1);
  m(2, 2) = LaurentHalf(1) - t_pow(2);
  m(3, 3) = -t_pow(2);
  return m;
}

DenseMatrix<LaurentHalf> r2_matrix() {
  auto m = r1_matrix();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = m(r, c) * -t_pow(-2);
  return m;
}

DenseMatrix<LaurentHalf> r3_matrix() {
  auto m = r2_matrix();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = specialize(m(r, c), Specialization::kT0ToInvT0);
  return m;
}

}  // namespace

const LocalOperator<LaurentHalf>& r_small(SmallR which) {
  static const LocalOperator<LaurentHalf> r1(2, r1_matrix());
  static const LocalOperator<LaurentHalf> r2(2, r2_matrix());
  static const LocalOperator<LaurentHalf> r3(2, r3_matrix());
  switch (which) {
    case SmallR::kR1: return r1;
    case SmallR::kR2: return r2;
    case SmallR::kR3: return r3;
  }
  throw std::invalid_argument("unknown R-matrix");
}

std::vector<LaurentHalf> alexander_weight(AlexanderWeight which) {
  if (which == AlexanderWeight::kH) return {t_pow(1), -t_pow(1)};
  return {LaurentHalf(1), LaurentHalf(-1)};
}

LaurentHalf alexander_trace(const BraidWord& b, SmallR rep, AlexanderWeight weight, bool normalized) {
  LaurentHalf value =
      weighted_trace(b, r_small(rep), alexander_weight(weight)).scaled(Rational(1, 2));
  if (normalized) value = value * t_pow(-(b.strands() - 1));
  return value;
}

}  // namespace lgbridge
