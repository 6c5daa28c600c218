#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace rookschur {

/// Exact rational number backed by GMP, always kept in canonical form:
/// denominator > 0, gcd(numerator, denominator) = 1, zero stored as 0/1.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(n) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : value_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  /// Parses "p/q" or "p" with optional sign; throws std::invalid_argument
  /// on malformed input or zero denominator.
  static Rational from_string(const std::string& s);

  /// Renders as "p/q", or "p" when the denominator is 1.
  std::string str() const;

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// bits(|num|) + bits(den); the pivot-selection weight used by the
  /// elimination kernels.
  std::size_t bit_size() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rookschur
