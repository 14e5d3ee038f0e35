#include "curvekit/rat.hpp"

#include "curvekit/errors.hpp"

namespace curvekit {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw CurveError(ErrorKind::DomainError, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s, 10));
    return Rat(Int(s.substr(0, slash), 10), Int(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw CurveError(ErrorKind::SyntaxError, "malformed rational '" + s + "'");
  }
}

Rat Rat::inverse() const {
  if (is_zero()) throw CurveError(ErrorKind::DomainError, "inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw CurveError(ErrorKind::DomainError, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::size_t bit_length(const Int& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace curvekit
