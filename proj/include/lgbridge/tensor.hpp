// Sparse states on W^{⊗n} and two-site local operators.
//
// A basis multi-index (i_1, ..., i_n), digits 0..d-1, is encoded as the
// base-d integer with site 1 most significant. A braid generator sigma_i
// acts by the local operator on sites (i, i+1) and by the identity
// elsewhere.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgbridge/braid.hpp"
#include "lgbridge/dense_matrix.hpp"
#include "lgbridge/parallel.hpp"

namespace lgbridge {

using BasisCode = std::uint64_t;

/// Digits of a basis code, site 1 first.
std::vector<int> decode_basis(BasisCode code, int site_dim, int sites);
BasisCode encode_basis(const std::vector<int>& digits, int site_dim);
/// d^n, throwing std::length_error if the code no longer fits 64 bits.
BasisCode basis_size(int site_dim, int sites);

template <class Scalar>
class SparseVector {
 public:
  using Entry = std::pair<BasisCode, Scalar>;

  SparseVector(int site_dim, int sites) : site_dim_(site_dim), sites_(sites) {}

  static SparseVector basis(int site_dim, int sites, BasisCode code) {
    SparseVector v(site_dim, sites);
    v.entries_.emplace_back(code, Scalar(1));
    return v;
  }

  /// Canonicalizes arbitrary entries: sorted by code, merged, zeros dropped.
  static SparseVector from_entries(int site_dim, int sites, std::vector<Entry> entries) {
    SparseVector v(site_dim, sites);
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& e : entries) {
      if (!v.entries_.empty() && v.entries_.back().first == e.first) {
        v.entries_.back().second += e.second;
      } else {
        if (!v.entries_.empty() && is_zero(v.entries_.back().second)) v.entries_.pop_back();
        v.entries_.push_back(std::move(e));
      }
    }
    if (!v.entries_.empty() && is_zero(v.entries_.back().second)) v.entries_.pop_back();
    return v;
  }

  int site_dim() const { return site_dim_; }
  int sites() const { return sites_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero_vector() const { return entries_.empty(); }

  Scalar coefficient(BasisCode code) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), code,
                               [](const Entry& e, BasisCode c) { return e.first < c; });
    if (it != entries_.end() && it->first == code) return it->second;
    return Scalar{};
  }

  friend SparseVector operator-(const SparseVector& a, const SparseVector& b) {
    std::vector<Entry> all = a.entries_;
    for (const auto& [c, x] : b.entries_) all.emplace_back(c, Scalar{} - x);
    return from_entries(a.site_dim_, a.sites_, std::move(all));
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) = default;

 private:
  int site_dim_;
  int sites_;
  std::vector<Entry> entries_;
};

/// A d^2 x d^2 operator on W ⊗ W, stored densely plus per-column nonzero
/// lists. The exact inverse is computed once at construction; it is absent
/// only for operators (such as deliberately corrupted ones) without a
/// unit-pivot elimination.
template <class Scalar>
class LocalOperator {
 public:
  using Column = std::vector<std::pair<int, Scalar>>;

  LocalOperator(int site_dim, DenseMatrix<Scalar> matrix)
      : site_dim_(site_dim), matrix_(std::move(matrix)) {
    const auto n = static_cast<std::size_t>(site_dim) * static_cast<std::size_t>(site_dim);
    if (matrix_.rows() != n || matrix_.cols() != n)
      throw std::invalid_argument("local operator must be d^2 x d^2");
    forward_ = columns_of(matrix_);
    if (auto inv = invert_with_unit_pivots(matrix_)) {
      inverse_matrix_ = std::move(*inv);
      backward_ = columns_of(*inverse_matrix_);
    }
  }

  int site_dim() const { return site_dim_; }
  const DenseMatrix<Scalar>& matrix() const { return matrix_; }
  bool has_inverse() const { return inverse_matrix_.has_value(); }
  const DenseMatrix<Scalar>& inverse_matrix() const {
    if (!inverse_matrix_) throw std::domain_error("local operator has no exact inverse");
    return *inverse_matrix_;
  }

  /// Nonzeros of column c of the operator (inverse = false) or its inverse.
  const Column& column(int c, bool inverse) const {
    if (inverse && !inverse_matrix_) throw std::domain_error("local operator has no exact inverse");
    return inverse ? backward_[static_cast<std::size_t>(c)] : forward_[static_cast<std::size_t>(c)];
  }

  /// Same operator with a different matrix (used to build perturbed copies).
  template <class Fn>
  LocalOperator modified(Fn&& edit) const {
    DenseMatrix<Scalar> m = matrix_;
    edit(m);
    return LocalOperator(site_dim_, std::move(m));
  }

 private:
  static std::vector<Column> columns_of(const DenseMatrix<Scalar>& m) {
    std::vector<Column> cols(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!is_zero(m(r, c))) cols[c].emplace_back(static_cast<int>(r), m(r, c));
    return cols;
  }

  int site_dim_;
  DenseMatrix<Scalar> matrix_;
  std::optional<DenseMatrix<Scalar>> inverse_matrix_;
  std::vector<Column> forward_;
  std::vector<Column> backward_;
};

/// Applies sigma_index^{sign} to v.
template <class Scalar>
SparseVector<Scalar> apply_letter(const LocalOperator<Scalar>& op, const Letter& letter,
                                  const SparseVector<Scalar>& v) {
  const int d = op.site_dim();
  const int n = v.sites();
  if (v.site_dim() != d) throw std::invalid_argument("apply_letter: site dimension mismatch");
  if (letter.index < 1 || letter.index >= n) throw std::invalid_argument("apply_letter: bad site");
  const auto dd = static_cast<BasisCode>(d) * static_cast<BasisCode>(d);
  BasisCode low = 1;  // place value of site index+1
  for (int s = letter.index + 1; s < n; ++s) low *= static_cast<BasisCode>(d);

  std::vector<typename SparseVector<Scalar>::Entry> out;
  out.reserve(v.entries().size() * 2);
  for (const auto& [code, coef] : v.entries()) {
    const BasisCode pair = (code / low) % dd;
    const BasisCode rest = code - pair * low;
    for (const auto& [row, x] : op.column(static_cast<int>(pair), letter.sign < 0))
      out.emplace_back(rest + static_cast<BasisCode>(row) * low, coef * x);
  }
  return SparseVector<Scalar>::from_entries(d, n, std::move(out));
}

/// rep(word) v with rep(s_1 s_2 ... s_k) = rep(s_1) rep(s_2) ... rep(s_k),
/// so the rightmost letter acts first.
template <class Scalar>
SparseVector<Scalar> apply_word(const BraidWord& word, const LocalOperator<Scalar>& op,
                                SparseVector<Scalar> v) {
  if (v.sites() != word.strands()) throw std::invalid_argument("apply_word: strand mismatch");
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = apply_letter(op, *it, v);
  return v;
}

/// Partial trace over sites 2..n of (id ⊗ w^{⊗n-1}) ∘ rep(word), as a d x d
/// matrix on site 1. With diagonal_only, only entries (a, a) are filled.
template <class Scalar>
DenseMatrix<Scalar> partial_trace(const BraidWord& word, const LocalOperator<Scalar>& op,
                                  const std::vector<Scalar>& weights, bool diagonal_only = false) {
  const int d = op.site_dim();
  const int n = word.strands();
  if (static_cast<int>(weights.size()) != d)
    throw std::invalid_argument("partial_trace: weight vector length must equal site dimension");
  const BasisCode total = basis_size(d, n);
  const BasisCode rest_count = total / static_cast<BasisCode>(d);

  // Product of site weights over sites 2..n for every "rest" multi-index.
  std::vector<Scalar> rest_weight(rest_count, Scalar(1));
  for (BasisCode rest = 0; rest < rest_count; ++rest) {
    BasisCode c = rest;
    Scalar w(1);
    for (int s = 1; s < n; ++s) {
      w = w * weights[static_cast<std::size_t>(c % static_cast<BasisCode>(d))];
      c /= static_cast<BasisCode>(d);
    }
    rest_weight[rest] = std::move(w);
  }

  auto body = [&](std::size_t idx, DenseMatrix<Scalar>& acc) {
    const BasisCode code = static_cast<BasisCode>(idx);
    const int col = static_cast<int>(code / rest_count);
    const BasisCode rest = code % rest_count;
    const auto image = apply_word(word, op, SparseVector<Scalar>::basis(d, n, code));
    for (int row = 0; row < d; ++row) {
      if (diagonal_only && row != col) continue;
      const Scalar c = image.coefficient(static_cast<BasisCode>(row) * rest_count + rest);
      if (!is_zero(c)) acc(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) += c * rest_weight[rest];
    }
  };
  auto combine = [](DenseMatrix<Scalar>& total_acc, const DenseMatrix<Scalar>& part) {
    for (std::size_t r = 0; r < total_acc.rows(); ++r)
      for (std::size_t c = 0; c < total_acc.cols(); ++c) total_acc(r, c) += part(r, c);
  };
  return parallel_reduce(static_cast<std::size_t>(total),
                         DenseMatrix<Scalar>(static_cast<std::size_t>(d), static_cast<std::size_t>(d)),
                         body, combine);
}

/// trace((id ⊗ w^{⊗n-1}) ∘ rep(word)).
template <class Scalar>
Scalar weighted_trace(const BraidWord& word, const LocalOperator<Scalar>& op,
                      const std::vector<Scalar>& weights) {
  const auto p = partial_trace(word, op, weights, /*diagonal_only=*/true);
  Scalar sum{};
  for (std::size_t a = 0; a < p.rows(); ++a) sum += p(a, a);
  return sum;
}

template <class Scalar>
struct PartialTraceScalar {
  Scalar value;       // c, read from entry (1, 1)
  bool is_scalar;     // partial trace == c * id
};

/// Computes the partial trace over sites 2..n and tests that it is c * id.
template <class Scalar>
PartialTraceScalar<Scalar> partial_trace_scalar(const BraidWord& word, const LocalOperator<Scalar>& op,
                                                const std::vector<Scalar>& weights) {
  const auto p = partial_trace(word, op, weights);
  PartialTraceScalar<Scalar> out{p(0, 0), true};
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c)
      if (!(p(r, c) == (r == c ? out.value : Scalar{}))) out.is_scalar = false;
  return out;
}

/// Checks (R⊗id)(id⊗R)(R⊗id) = (id⊗R)(R⊗id)(id⊗R) on every basis vector
/// of W^{⊗3}; returns the first basis code where the two sides differ.
template <class Scalar>
std::optional<BasisCode> yang_baxter_violation(const LocalOperator<Scalar>& op) {
  const int d = op.site_dim();
  const BraidWord lhs(3, {{1, 1}, {2, 1}, {1, 1}});
  const BraidWord rhs(3, {{2, 1}, {1, 1}, {2, 1}});
  const BasisCode total = basis_size(d, 3);
  for (BasisCode code = 0; code < total; ++code) {
    const auto e = SparseVector<Scalar>::basis(d, 3, code);
    if (!(apply_word(lhs, op, e) == apply_word(rhs, op, e))) return code;
  }
  return std::nullopt;
}

}  // namespace lgbridge
