#include "lgbridge/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace lgbridge {

const LaurentHalf2& ExtScalar::y_squared() {
  // (t0 - 1)(1 - t1) = t0 - t0 t1 - 1 + t1
  static const LaurentHalf2 value =
      t2_pow(2, 0) - t2_pow(2, 2) - LaurentHalf2(1) + t2_pow(0, 2);
  return value;
}

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
  LaurentHalf2 base = a.base_ * b.base_;
  if (!a.ycoef_.is_zero() && !b.ycoef_.is_zero())
    base += a.ycoef_ * b.ycoef_ * ExtScalar::y_squared();
  LaurentHalf2 ycoef = a.base_ * b.ycoef_ + a.ycoef_ * b.base_;
  return {std::move(base), std::move(ycoef)};
}

std::optional<ExtScalar> unit_inverse(const ExtScalar& x) {
  if (!x.ycoef().is_zero()) return std::nullopt;
  auto inv = x.base().unit_inverse();
  if (!inv) return std::nullopt;
  return ExtScalar(std::move(*inv));
}

LaurentHalf exact_divide(const LaurentHalf& num, const LaurentHalf& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  if (num.is_zero()) return {};

  // Shift both to ordinary polynomials in u = t^{1/2} with nonzero constant
  // term on the divisor; Laurent divisibility then equals polynomial
  // divisibility.
  const int num_low = num.min_exponent()[0];
  const int den_low = den.min_exponent()[0];
  const int num_deg = num.max_exponent()[0] - num_low;
  const int den_deg = den.max_exponent()[0] - den_low;
  if (num_deg < den_deg) throw NotDivisible("exact_divide: divisor degree exceeds dividend");

  std::vector<Rational> rem(static_cast<std::size_t>(num_deg) + 1);
  for (const auto& [e, c] : num.terms()) rem[static_cast<std::size_t>(e[0] - num_low)] = c;
  std::vector<Rational> dv(static_cast<std::size_t>(den_deg) + 1);
  for (const auto& [e, c] : den.terms()) dv[static_cast<std::size_t>(e[0] - den_low)] = c;

  const Rational& lead = dv.back();
  std::vector<LaurentHalf::Term> quotient;
  for (int k = num_deg - den_deg; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + den_deg)] / lead;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= den_deg; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * dv[static_cast<std::size_t>(j)];
    quotient.emplace_back(LaurentHalf::Exponent{k + num_low - den_low}, q);
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) throw NotDivisible("exact_divide: nonzero remainder");
  return LaurentHalf::from_terms(std::move(quotient));
}

std::optional<Unit> equal_up_to_unit(const LaurentHalf& p, const LaurentHalf& q) {
  if (p.is_zero() && q.is_zero()) return Unit{};
  if (p.is_zero() || q.is_zero() || p.size() != q.size()) return std::nullopt;
  const Rational ratio = p.terms().front().second / q.terms().front().second;
  int sign = 0;
  if (ratio == 1) {
    sign = 1;
  } else if (ratio == -1) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  const int shift = p.min_exponent()[0] - q.min_exponent()[0];
  if (q.shifted({shift}).scaled(Rational(sign)) != p) return std::nullopt;
  return Unit{sign, shift};
}

LaurentHalf specialize(const LaurentHalf2& x, Specialization rule) {
  std::vector<LaurentHalf::Term> out;
  out.reserve(x.size());
  for (const auto& [e, c] : x.terms()) {
    switch (rule) {
      case Specialization::kT1ToInvT0:
        // t1^{b/2} -> (-t0^{-1/2})^b
        out.emplace_back(LaurentHalf::Exponent{e[0] - e[1]},
                         (e[1] % 2 != 0) ? Rational(-c) : c);
        break;
      case Specialization::kT1ToOne:
        out.emplace_back(LaurentHalf::Exponent{e[0]}, c);
        break;
      case Specialization::kT0ToInvT0:
        throw std::invalid_argument("specialize: t0_to_inv_t0 applies to single-variable polynomials");
    }
  }
  return LaurentHalf::from_terms(std::move(out));
}

LaurentHalf specialize(const ExtScalar& x, Specialization rule) {
  LaurentHalf out = specialize(x.base(), rule);
  if (rule == Specialization::kT1ToInvT0 && !x.ycoef().is_zero())
    out += specialize(x.ycoef(), rule) * (t_pow(1) - t_pow(-1));
  return out;
}

LaurentHalf specialize(const LaurentHalf& x, Specialization rule) {
  if (rule != Specialization::kT0ToInvT0)
    throw std::invalid_argument("specialize: rule needs a two-variable polynomial");
  std::vector<LaurentHalf::Term> out;
  out.reserve(x.size());
  for (const auto& [e, c] : x.terms()) out.emplace_back(LaurentHalf::Exponent{-e[0]}, c);
  return LaurentHalf::from_terms(std::move(out));
}

LaurentHalf2 swap_variables(const LaurentHalf2& x) {
  std::vector<LaurentHalf2::Term> out;
  out.reserve(x.size());
  for (const auto& [e, c] : x.terms()) out.emplace_back(LaurentHalf2::Exponent{e[1], e[0]}, c);
  return LaurentHalf2::from_terms(std::move(out));
}

ExtScalar swap_variables(const ExtScalar& x) {
  return {swap_variables(x.base()), swap_variables(x.ycoef())};
}

LaurentHalf normalize_unit(const LaurentHalf& p) {
  if (p.is_zero()) return p;
  const int low = p.min_exponent()[0];
  const int sign = sgn(p.terms().front().second) < 0 ? -1 : 1;
  return p.shifted({-low}).scaled(Rational(sign));
}

namespace {

std::complex<double> half_power(std::complex<double> t, int half) {
  return std::pow(std::sqrt(t), half);
}

}  // namespace

std::complex<double> evaluate_numeric(const LaurentHalf& p, const EvalPoint& at) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : p.terms()) sum += c.get_d() * half_power(at.t0, e[0]);
  return sum;
}

std::complex<double> evaluate_numeric(const LaurentHalf2& p, const EvalPoint& at) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : p.terms())
    sum += c.get_d() * half_power(at.t0, e[0]) * half_power(at.t1, e[1]);
  return sum;
}

std::complex<double> evaluate_numeric(const ExtScalar& p, const EvalPoint& at) {
  if (!p.ycoef().is_zero()) {
    const auto expected = (at.t0 - 1.0) * (1.0 - at.t1);
    const double scale = std::max(1.0, std::abs(expected));
    if (std::abs(at.y * at.y - expected) > 1e-9 * scale)
      throw std::invalid_argument("evaluate_numeric: y^2 != (t0 - 1)(1 - t1)");
  }
  return evaluate_numeric(p.base(), at) + at.y * evaluate_numeric(p.ycoef(), at);
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string power_string(const std::string& var, int half) {
  if (half == 0) return "";
  if (half % 2 == 0) {
    const int e = half / 2;
    return e == 1 ? var : var + "^" + std::to_string(e);
  }
  return var + "^(" + std::to_string(half) + "/2)";
}

std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << to_string(mag) << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace

std::string to_string(const LaurentHalf& p, const std::string& var) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(c, power_string(var, e[0]));
  return render_terms(terms);
}

std::string to_string(const LaurentHalf2& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [e, c] : p.terms()) {
    std::string a = power_string("t0", e[0]);
    std::string b = power_string("t1", e[1]);
    terms.emplace_back(c, a.empty() ? b : (b.empty() ? a : a + "*" + b));
  }
  return render_terms(terms);
}

std::string to_string(const ExtScalar& p) {
  if (p.ycoef().is_zero()) return to_string(p.base());
  const std::string y = "(" + to_string(p.ycoef()) + ")*Y";
  if (p.base().is_zero()) return y;
  return to_string(p.base()) + " + " + y;
}

}  // namespace lgbridge
