#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "curvekit/rat.hpp"

namespace curvekit {

// Dense univariate polynomial over a commutative ring T, coefficients stored
// from the constant term upward. The zero polynomial has no coefficients and
// degree -1.
template <class T>
class UPoly {
 public:
  using Scalar = T;

  UPoly() = default;
  UPoly(const T& constant) {  // NOLINT: implicit scalar embedding
    if (!is_zero(constant)) c_.push_back(constant);
  }
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const T& coeff, std::size_t k) {
    if (is_zero(coeff)) return UPoly();
    std::vector<T> c(k + 1, T(0));
    c[k] = coeff;
    return UPoly(std::move(c));
  }
  static UPoly variable() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const T& lc() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  void set_coeff(std::size_t k, const T& v) {
    if (k >= c_.size()) {
      if (is_zero(v)) return;
      c_.resize(k + 1, T(0));
    }
    c_[k] = v;
    trim();
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UPoly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const T& s, const UPoly& p) {
    if (is_zero(s)) return UPoly();
    UPoly r = p;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<T> r(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = T(static_cast<long>(i)) * c_[i];
    return UPoly(std::move(r));
  }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  // Multiply by var^k.
  UPoly shift(std::size_t k) const {
    if (c_.empty()) return UPoly();
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
bool is_zero(const UPoly<T>& p) {
  return p.is_zero_poly();
}

template <class T>
UPoly<T> pow(const UPoly<T>& p, unsigned e) {
  UPoly<T> r(T(1));
  UPoly<T> b = p;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

using QPoly = UPoly<Rat>;

// Polynomials over a field: division with remainder and gcd.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly exact_div(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
QPoly gcd(const QPoly& a, const QPoly& b);
// Returns g = gcd(a,b) (monic) and s, t with s*a + t*b = g.
QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
QPoly compose(const QPoly& p, const QPoly& q);

// Resultant with the convention Res(f,g) = lc(f)^deg g * prod g(roots of f).
Rat resultant(const QPoly& f, const QPoly& g);

// Squarefree factorization (Yun). Returns pairs (factor, multiplicity) with
// monic, pairwise coprime, squarefree factors; the product of factor^mult
// equals p up to its leading coefficient.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);
QPoly squarefree_part(const QPoly& p);

// Scales p to a primitive integer polynomial with positive leading coefficient.
QPoly primitive_integer(const QPoly& p);
Int integer_content_lcm_den(const QPoly& p);
std::vector<Int> integer_coefficients(const QPoly& p);

std::string to_string(const QPoly& p, const std::string& var = "x");

// Polynomials in y with coefficients in Q[x].
using BiPoly = UPoly<QPoly>;

// Resultant with respect to the main variable, via fraction-free elimination.
QPoly resultant_y(const BiPoly& f, const BiPoly& g);
// Coefficients (s1, s0) of the first subresultant s1 y + s0; needs both degrees >= 1.
std::pair<QPoly, QPoly> first_subresultant_y(const BiPoly& f, const BiPoly& g);
QPoly content(const BiPoly& f);
BiPoly primitive_part(const BiPoly& f);
// Greatest common divisor in Q[x][y], normalized to be monic in its leading
// Q[x] coefficient's leading term.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
BiPoly derivative_x(const BiPoly& f);
BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b);
QPoly eval_x(const BiPoly& f, const Rat& x);  // gives a polynomial in y
QPoly eval_y(const BiPoly& f, const Rat& y);  // gives a polynomial in x

}  // namespace curvekit
