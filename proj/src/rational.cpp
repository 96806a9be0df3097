#include "depol/rational.hpp"

#include <ostream>

namespace depol {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty token");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      return Rational(mpq_class(n));
    }
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: bad token '" + s + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace depol
