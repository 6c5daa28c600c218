#include "rookschur/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rookschur {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
  }
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("Rational: zero denominator in \"" + s + "\"");
  }
  if (sgn(q.get_den()) < 0) {
    // set_str accepts "1/-2"; normalize the sign into the numerator.
    q = mpq_class(-q.get_num(), -q.get_den());
  }
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(); }

std::size_t Rational::bit_size() const {
  if (is_zero()) return 1;
  return mpz_sizeinbase(value_.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(value_.get_den().get_mpz_t(), 2);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rookschur
