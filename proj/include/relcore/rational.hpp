#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace relcore {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP so probability identities hold without any
/// overflow or rounding caveats.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long num, long long den);
  explicit Rational(long long num) : Rational(num, 1) {}
  explicit Rational(const mpq_class& q);

  /// Parses "12", "-3.25", "7/4". Decimal fractions are captured exactly
  /// ("3.25" becomes 13/4). Throws parse_error otherwise.
  static Rational parse(const std::string& text);

  std::string num_str() const { return value_.get_num().get_str(); }
  std::string den_str() const { return value_.get_den().get_str(); }

  double to_double() const { return value_.get_d(); }
  /// Renders as "p/q" ("p" when q == 1).
  std::string to_string() const;
  /// Always renders as "p/q", including "p/1".
  std::string to_fraction_string() const;

  Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }
  bool operator<=(const Rational& o) const { return value_ <= o.value_; }
  bool operator>(const Rational& o) const { return value_ > o.value_; }
  bool operator>=(const Rational& o) const { return value_ >= o.value_; }

  bool is_zero() const { return value_ == 0; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// N_num / N_den as an exact rational; den must be nonzero.
Rational make_ratio(std::uint64_t num, std::uint64_t den);

}  // namespace relcore
