// Sparse Laurent polynomials with half-integer exponents and exact rational
// coefficients.
//
// Exponents are stored as integers counting powers of t^{1/2}, so the
// monomial t0^{3/2} t1^{-1} is the key {3, -2}. Terms are kept sorted by
// exponent with zero coefficients pruned, which makes equality structural.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lgbridge/rational.hpp"

namespace lgbridge {

template <std::size_t Vars>
class Laurent {
 public:
  using Exponent = std::array<int, Vars>;
  using Term = std::pair<Exponent, Rational>;

  Laurent() = default;
  Laurent(long constant) : Laurent(Rational(constant)) {}  // NOLINT(implicit)
  Laurent(const Rational& constant) {                      // NOLINT(implicit)
    if (sgn(constant) != 0) terms_.emplace_back(Exponent{}, constant);
  }

  static Laurent monomial(const Rational& coef, const Exponent& exp) {
    Laurent out;
    if (sgn(coef) != 0) out.terms_.emplace_back(exp, coef);
    return out;
  }

  /// Builds a canonical polynomial from arbitrary (possibly repeated,
  /// unsorted, zero) terms.
  static Laurent from_terms(std::vector<Term> terms) {
    Laurent out;
    out.terms_ = std::move(terms);
    out.canonicalize();
    return out;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Exponent& min_exponent() const { return terms_.front().first; }
  const Exponent& max_exponent() const { return terms_.back().first; }

  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Exponent& exp) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exp,
        [](const Term& t, const Exponent& e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return Rational(0);
  }

  /// Inverse when this is a single monomial c*t^k, otherwise empty.
  std::optional<Laurent> unit_inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    Exponent neg{};
    for (std::size_t v = 0; v < Vars; ++v) neg[v] = -terms_[0].first[v];
    return monomial(Rational(1) / terms_[0].second, neg);
  }

  Laurent shifted(const Exponent& by) const {
    Laurent out = *this;
    for (auto& [e, c] : out.terms_)
      for (std::size_t v = 0; v < Vars; ++v) e[v] += by[v];
    return out;
  }

  Laurent scaled(const Rational& factor) const {
    if (sgn(factor) == 0) return {};
    Laurent out = *this;
    for (auto& term : out.terms_) term.second *= factor;
    return out;
  }

  Laurent operator-() const { return scaled(Rational(-1)); }

  Laurent& operator+=(const Laurent& rhs) { return *this = merge(*this, rhs, false); }
  Laurent& operator-=(const Laurent& rhs) { return *this = merge(*this, rhs, true); }
  Laurent& operator*=(const Laurent& rhs) { return *this = *this * rhs; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return merge(a, b, false); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return merge(a, b, true); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
    if (b.terms_.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e{};
        for (std::size_t v = 0; v < Vars; ++v) e[v] = ea[v] + eb[v];
        prod.emplace_back(e, ca * cb);
      }
    }
    return from_terms(std::move(prod));
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& term : terms_) {
      if (!merged.empty() && merged.back().first == term.first) {
        merged.back().second += term.second;
      } else {
        if (!merged.empty() && sgn(merged.back().second) == 0) merged.pop_back();
        merged.push_back(std::move(term));
      }
    }
    if (!merged.empty() && sgn(merged.back().second) == 0) merged.pop_back();
    terms_ = std::move(merged);
  }

  static Laurent merge(const Laurent& a, const Laurent& b, bool subtract) {
    Laurent out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        out.terms_.emplace_back(ib->first, subtract ? Rational(-ib->second) : ib->second);
        ++ib;
      } else {
        Rational c = subtract ? Rational(ia->second - ib->second)
                              : Rational(ia->second + ib->second);
        if (sgn(c) != 0) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

/// Polynomial in t0^{±1/2} (the single-variable ring of the Alexander side).
using LaurentHalf = Laurent<1>;
/// Polynomial in t0^{±1/2}, t1^{±1/2}.
using LaurentHalf2 = Laurent<2>;

/// c * t^{half/2}.
inline LaurentHalf t_pow(int half, const Rational& c = Rational(1)) {
  return LaurentHalf::monomial(c, {half});
}

/// c * t0^{h0/2} * t1^{h1/2}.
inline LaurentHalf2 t2_pow(int h0, int h1, const Rational& c = Rational(1)) {
  return LaurentHalf2::monomial(c, {h0, h1});
}

template <std::size_t Vars>
bool is_zero(const Laurent<Vars>& x) {
  return x.is_zero();
}

template <std::size_t Vars>
std::optional<Laurent<Vars>> unit_inverse(const Laurent<Vars>& x) {
  return x.unit_inverse();
}

}  // namespace lgbridge
