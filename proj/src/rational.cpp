#include "lgbridge/rational.hpp"

#include <limits>
#include <stdexcept>

namespace lgbridge {

namespace {

using Wide = __int128;
using UWide = unsigned __int128;

UWide magnitude(Wide x) { return x < 0 ? UWide(0) - static_cast<UWide>(x) : static_cast<UWide>(x); }

UWide gcd_wide(UWide a, UWide b) {
  while (b != 0) {
    const UWide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool fits64(Wide x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(Wide x) {
  const UWide m = magnitude(x);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class lo(static_cast<unsigned long>(m & ~std::uint64_t{0}));
  mpz_class out = (hi << 64) + lo;
  return x < 0 ? mpz_class(-out) : out;
}

mpq_class to_mpq_wide(Wide num, Wide den) {
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den != 1) {
    const UWide g = gcd_wide(magnitude(num), static_cast<UWide>(den));
    if (g > 1) {
      num /= static_cast<Wide>(g);
      den /= static_cast<Wide>(g);
    }
  }
  if (num == 0) den = 1;
  Rational out;
  if (fits64(num) && fits64(den)) {
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
  } else {
    out.assign_big(to_mpq_wide(num, den));
  }
  return out;
}

Rational::Rational(const mpq_class& value) {
  if (sgn(value.get_den()) == 0) throw std::domain_error("rational with zero denominator");
  mpq_class canonical = value;
  canonical.canonicalize();
  assign_big(canonical);
}

void Rational::assign_big(const mpq_class& value) {
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(value);
  }
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::get_str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::numerator_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
std::string Rational::denominator_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

Rational Rational::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  Rational out;
  out.assign_big(-to_mpq());
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(static_cast<long>(s));
    }
    return Rational::from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
  }
  Rational out;
  out.assign_big(a.to_mpq() + b.to_mpq());
  return out;
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_sub_overflow(a.num_, b.num_, &s)) return Rational(static_cast<long>(s));
    }
    return Rational::from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
  }
  Rational out;
  out.assign_big(a.to_mpq() - b.to_mpq());
  return out;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(static_cast<long>(p));
    }
    return Rational::from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  Rational out;
  out.assign_big(a.to_mpq() * b.to_mpq());
  return out;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  if (!a.big_ && !b.big_) return Rational::from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
  Rational out;
  out.assign_big(a.to_mpq() / b.to_mpq());
  return out;
}

}  // namespace lgbridge
