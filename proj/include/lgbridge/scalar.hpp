// Scalar rings used by the braid representations: the quadratic extension
// by Y with Y^2 = (t0 - 1)(1 - t1), ring morphisms between the rings, unit
// comparison, numeric evaluation and text rendering.
#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "lgbridge/laurent.hpp"

namespace lgbridge {

/// base + ycoef * Y, with Y^2 = (t0 - 1)(1 - t1).
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(long constant) : base_(constant) {}  // NOLINT(implicit)
  ExtScalar(LaurentHalf2 base, LaurentHalf2 ycoef = {})  // NOLINT(implicit)
      : base_(std::move(base)), ycoef_(std::move(ycoef)) {}

  static ExtScalar y() { return ExtScalar({}, LaurentHalf2(1)); }
  /// (t0 - 1)(1 - t1) expanded.
  static const LaurentHalf2& y_squared();

  const LaurentHalf2& base() const { return base_; }
  const LaurentHalf2& ycoef() const { return ycoef_; }
  bool is_zero() const { return base_.is_zero() && ycoef_.is_zero(); }

  ExtScalar operator-() const { return {-base_, -ycoef_}; }
  ExtScalar& operator+=(const ExtScalar& rhs) {
    base_ += rhs.base_;
    ycoef_ += rhs.ycoef_;
    return *this;
  }
  ExtScalar& operator-=(const ExtScalar& rhs) {
    base_ -= rhs.base_;
    ycoef_ -= rhs.ycoef_;
    return *this;
  }
  ExtScalar& operator*=(const ExtScalar& rhs) { return *this = *this * rhs; }

  friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
  friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
  friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
  friend bool operator==(const ExtScalar& a, const ExtScalar& b) = default;

 private:
  LaurentHalf2 base_;
  LaurentHalf2 ycoef_;
};

inline bool is_zero(const ExtScalar& x) { return x.is_zero(); }
/// Inverse of a unit monomial with no Y part; empty otherwise.
std::optional<ExtScalar> unit_inverse(const ExtScalar& x);

/// Raised when an exact division leaves a remainder.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quotient q with q * den == num. Throws NotDivisible when den does not
/// divide num, std::invalid_argument when den is zero.
LaurentHalf exact_divide(const LaurentHalf& num, const LaurentHalf& den);

/// p == sign * t^{shift/2} * q.
struct Unit {
  int sign = 1;
  int shift = 0;
  friend bool operator==(const Unit&, const Unit&) = default;
};

/// Finds the unit relating p to q, if any. Two zero polynomials are related
/// by the trivial unit.
std::optional<Unit> equal_up_to_unit(const LaurentHalf& p, const LaurentHalf& q);

enum class Specialization {
  kT1ToInvT0,  // t1 := t0^{-1}, t1^{1/2} := -t0^{-1/2}, Y := t0^{1/2} - t0^{-1/2}
  kT1ToOne,    // t1 := 1, t1^{1/2} := 1, Y := 0
  kT0ToInvT0,  // t0^{1/2} := t0^{-1/2}
};

LaurentHalf specialize(const LaurentHalf2& x, Specialization rule);
LaurentHalf specialize(const ExtScalar& x, Specialization rule);
LaurentHalf specialize(const LaurentHalf& x, Specialization rule);

/// Exchanges t0 and t1. Y is fixed since Y^2 is symmetric in t0, t1.
LaurentHalf2 swap_variables(const LaurentHalf2& x);
ExtScalar swap_variables(const ExtScalar& x);

/// Representative of the unit class of p with lowest exponent 0 and a
/// positive lowest coefficient.
LaurentHalf normalize_unit(const LaurentHalf& p);

/// Point for numeric evaluation. Half powers use the principal square root
/// of t0 and t1; y must satisfy y^2 = (t0 - 1)(1 - t1) when Y appears.
struct EvalPoint {
  std::complex<double> t0{1.0, 0.0};
  std::complex<double> t1{1.0, 0.0};
  std::complex<double> y{0.0, 0.0};
};

std::complex<double> evaluate_numeric(const LaurentHalf& p, const EvalPoint& at);
std::complex<double> evaluate_numeric(const LaurentHalf2& p, const EvalPoint& at);
/// Throws std::invalid_argument when at.y is inconsistent with t0, t1.
std::complex<double> evaluate_numeric(const ExtScalar& p, const EvalPoint& at);

/// Ascending-exponent rendering, e.g. "1 - t + t^2" or "-t^(-1/2) + 2*t^(3/2)".
std::string to_string(const LaurentHalf& p, const std::string& var = "t");
std::string to_string(const LaurentHalf2& p);
std::string to_string(const ExtScalar& p);
std::string to_string(const Rational& q);

}  // namespace lgbridge
