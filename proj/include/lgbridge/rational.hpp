// Exact rationals: machine-word numerator/denominator while they fit, GMP
// otherwise. A value is stored in the small form whenever it fits, so equal
// values always have equal representations.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace lgbridge {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : num_(value) {}  // NOLINT(implicit)
  Rational(long num, long den);
  /// Accepts non-canonical input; throws std::domain_error for a zero denominator.
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other)
      : num_(other.num_), den_(other.den_),
        big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_small() const { return !big_; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

  mpq_class to_mpq() const;
  double get_d() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }
  std::string get_str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }

 private:
  using Wide = __int128;

  static Rational from_wide(Wide num, Wide den);
  void assign_big(const mpq_class& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;  // > 0, coprime with num_
  std::unique_ptr<mpq_class> big_;
};

inline int sgn(const Rational& q) { return q.sign(); }
inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace lgbridge
