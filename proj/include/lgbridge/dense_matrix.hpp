// Small dense matrices over an exact scalar ring.
//
// Convention throughout: column-action. Entry (r, c) is the coefficient of
// basis vector r in the image of basis vector c.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lgbridge {

template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(r, k);
        if (is_zero(x)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          if (!is_zero(b(k, c))) out(r, c) += x * b(k, c);
      }
    return out;
  }

  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix difference: shape mismatch");
    DenseMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& x : entries_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Gauss-Jordan inverse that only divides by units (monomials). Every
/// matrix this project inverts has a unit pivot available in each column at
/// every step; returns empty if that ever fails.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> invert_with_unit_pivots(DenseMatrix<Scalar> m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("invert: matrix not square");
  auto inv = DenseMatrix<Scalar>::identity(n);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> pivot_row_of(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<Scalar> pivot_inv;
    std::size_t prow = n;
    for (std::size_t r = 0; r < n && !pivot_inv; ++r) {
      if (used[r] || is_zero(m(r, col))) continue;
      if (auto u = unit_inverse(m(r, col))) {
        pivot_inv = std::move(u);
        prow = r;
      }
    }
    if (!pivot_inv) return std::nullopt;
    used[prow] = true;
    pivot_row_of[col] = prow;
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_zero(m(prow, c))) m(prow, c) = m(prow, c) * *pivot_inv;
      if (!is_zero(inv(prow, c))) inv(prow, c) = inv(prow, c) * *pivot_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == prow || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!is_zero(m(prow, c))) m(r, c) -= factor * m(prow, c);
        if (!is_zero(inv(prow, c))) inv(r, c) -= factor * inv(prow, c);
      }
    }
  }
  // Row pivot_row_of[col] now holds row col of the inverse.
  DenseMatrix<Scalar> out(n, n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t c = 0; c < n; ++c) out(col, c) = inv(pivot_row_of[col], c);
  return out;
}

}  // namespace lgbridge
