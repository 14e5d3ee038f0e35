#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "curvekit/rat.hpp"
#include "curvekit/upoly.hpp"

namespace curvekit {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision of newly created Real values for the lifetime of
// the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_digits10_;
};

Real to_real(const Rat& r);
Real two_pow(int e);
std::string format_real(const Real& x, int digits = 17);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Rat& r) : re(to_real(r)), im(0) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex operator-() const { return Complex(-re, -im); }
};

Real abs(const Complex& z);
std::string format_complex(const Complex& z, int digits = 17);

// Values of p and p' at z.
void eval_with_derivative(const std::vector<Complex>& coeffs, const Complex& z, Complex& p, Complex& dp);
Complex eval(const QPoly& p, const Complex& z);
// Upper bound for |p(w) - p(z)| when |w - z| <= r.
Real eval_error_bound(const QPoly& p, const Complex& z, const Real& r);

struct IsolatedRoot {
  Complex z;
  Real radius;  // the disc of this radius around z contains exactly one root
};

// Certified isolation of all complex roots of a squarefree polynomial: the
// returned discs are pairwise disjoint and each radius is at most
// 2^-bits * max(1, |z|). Throws PrecisionUnreachable past the iteration cap.
std::vector<IsolatedRoot> isolate_roots(const QPoly& squarefree, unsigned bits, unsigned max_bits = 1u << 15);

// All rational roots of p (without multiplicity), in increasing order.
std::vector<Rat> rational_roots(const QPoly& p);

}  // namespace curvekit
