#include "curvekit/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "curvekit/errors.hpp"

namespace curvekit {

namespace mp = boost::multiprecision;

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(Real::default_precision()) {
  const unsigned digits = static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
  Real::default_precision(std::max(digits, saved_digits10_));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits10_); }

Real to_real(const Rat& r) {
  Real x;
  mpfr_set_q(x.backend().data(), r.get().get_mpq_t(), MPFR_RNDN);
  return x;
}

Real two_pow(int e) {
  Real x(1);
  mpfr_mul_2si(x.backend().data(), x.backend().data(), e, MPFR_RNDN);
  return x;
}

std::string format_real(const Real& x, int digits) {
  if (x == 0) return "0";
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits - 1) << x;
  return os.str();
}

Complex operator/(const Complex& a, const Complex& b) {
  const Real d = b.re * b.re + b.im * b.im;
  return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Real abs(const Complex& z) { return mp::sqrt(z.re * z.re + z.im * z.im); }

std::string format_complex(const Complex& z, int digits) {
  return format_real(z.re, digits) + (z.im < 0 ? " - " : " + ") + format_real(mp::abs(z.im), digits) + "i";
}

void eval_with_derivative(const std::vector<Complex>& c, const Complex& z, Complex& p, Complex& dp) {
  p = Complex();
  dp = Complex();
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

Complex eval(const QPoly& p, const Complex& z) {
  Complex acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + Complex(p.coeffs()[i]);
  return acc;
}

Real eval_error_bound(const QPoly& p, const Complex& z, const Real& r) {
  // |p(w)-p(z)| <= sum_k |p^(k)(z)|/k! r^k, bounded via coefficient moduli.
  const Real m = abs(z) + r;
  Real bound(0);
  Real dsum(0);
  for (int i = p.degree(); i >= 1; --i) {
    dsum = dsum * m + mp::abs(to_real(p.coeffs()[i])) * i;
  }
  bound = dsum * r;
  return bound;
}

namespace {

std::vector<Complex> to_complex_coeffs(const QPoly& p) {
  std::vector<Complex> c;
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return c;
}

bool aberth(const std::vector<Complex>& c, std::vector<Complex>& z, const Real& tol, int max_iter) {
  const std::size_t n = z.size();
  for (int it = 0; it < max_iter; ++it) {
    Real worst(0);
    for (std::size_t k = 0; k < n; ++k) {
      Complex p, dp;
      eval_with_derivative(c, z[k], p, dp);
      if (p.re == 0 && p.im == 0) continue;
      Complex s;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex d = z[k] - z[j];
        if (d.re == 0 && d.im == 0) continue;
        s += Complex(Real(1), Real(0)) / d;
      }
      const Complex w = p / dp;
      const Complex corr = w / (Complex(Real(1), Real(0)) - w * s);
      z[k] -= corr;
      const Real a = abs(corr) / std::max(Real(1), abs(z[k]));
      if (a > worst) worst = a;
    }
    if (worst < tol) return true;
  }
  return false;
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots(const QPoly& f, unsigned bits, unsigned max_bits) {
  const int n = f.degree();
  std::vector<IsolatedRoot> out;
  if (n <= 0) return out;
  if (n == 1) {
    PrecisionGuard g(bits + 32);
    out.push_back({Complex(-f.coeffs()[0] / f.coeffs()[1]), Real(0)});
    return out;
  }
  // Working precision grows with coefficient size.
  std::size_t coeff_bits = 0;
  for (const auto& v : integer_coefficients(f)) coeff_bits = std::max(coeff_bits, bit_length(v));
  unsigned work = std::max<unsigned>(bits + 64, static_cast<unsigned>(2 * coeff_bits + 64));
  std::vector<Complex> z;
  while (work <= max_bits) {
    PrecisionGuard g(work);
    const std::vector<Complex> c = to_complex_coeffs(f);
    if (z.empty()) {
      // Initial guesses on a circle of radius (|a0/an|)^(1/n), slightly rotated.
      Real r = mp::abs(to_real(f.coeffs()[0]) / to_real(f.lc()));
      r = r == 0 ? Real(1) : Real(mp::pow(r, Real(1) / n));
      const Real pi = mp::acos(Real(-1));
      for (int k = 0; k < n; ++k) {
        const Real a = 2 * pi * k / n + Real(0.4);
        z.emplace_back(r * mp::cos(a), r * mp::sin(a));
      }
    } else {
      for (auto& w : z) w = Complex(Real(w.re), Real(w.im));
    }
    aberth(c, z, two_pow(-static_cast<int>(work) + 16), 50 + 8 * n);
    std::vector<Real> rad(n);
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      Complex p, dp;
      eval_with_derivative(c, z[k], p, dp);
      const Real adp = abs(dp);
      if (adp == 0) {
        ok = false;
        break;
      }
      rad[k] = (abs(p) / adp) * n * Real(1.001) + two_pow(-static_cast<int>(work) + 8) * std::max(Real(1), abs(z[k]));
      if (rad[k] > two_pow(-static_cast<int>(bits)) * std::max(Real(1), abs(z[k]))) ok = false;
    }
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (abs(z[i] - z[j]) <= rad[i] + rad[j]) ok = false;
    if (ok) {
      for (int k = 0; k < n; ++k) out.push_back({z[k], rad[k]});
      return out;
    }
    work *= 2;
  }
  throw CurveError(ErrorKind::PrecisionUnreachable, "root isolation did not converge within the precision cap");
}

std::vector<Rat> rational_roots(const QPoly& p) {
  std::vector<Rat> out;
  if (p.degree() < 1) return out;
  QPoly f = squarefree_part(p);
  // Strip zero roots and obvious small candidates exactly first.
  if (f.coeffs()[0].is_zero()) {
    out.push_back(Rat(0));
    f = exact_div(f, QPoly::variable());
  }
  while (f.degree() >= 1) {
    if (f.degree() == 1) {
      out.push_back(-f.coeffs()[0] / f.coeffs()[1]);
      break;
    }
    const std::vector<Int> ic = integer_coefficients(f);
    const Int lc = ic.back();
    const Int lc_abs = lc < 0 ? Int(-lc) : lc;
    // Rational roots have the form N/lc; isolate until discs are narrower than
    // half the spacing of such numbers.
    std::size_t mag = 0;
    for (const auto& v : ic) mag = std::max(mag, bit_length(v));
    const unsigned need = static_cast<unsigned>(bit_length(lc_abs) + mag + 10);
    const auto roots = isolate_roots(f, need);
    std::vector<Rat> found;
    {
      PrecisionGuard g(need + 64);
      const Real lcr = to_real(Rat(lc));
      for (const auto& r : roots) {
        if (mp::abs(r.z.im) > r.radius) continue;
        const Real t = r.z.re * lcr;
        Int num;
        mpfr_get_z(num.get_mpz_t(), t.backend().data(), MPFR_RNDN);
        const Rat cand(num, lc);
        if (f.eval(cand).is_zero()) found.push_back(cand);
      }
    }
    for (const auto& r : found) out.push_back(r);
    break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace curvekit
