#include "curvekit/upoly.hpp"

#include <sstream>
#include <stdexcept>

#include "curvekit/errors.hpp"
#include "curvekit/linalg.hpp"

namespace curvekit {

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero_poly()) throw CurveError(ErrorKind::DomainError, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rat> q(a.degree() - db + 1, Rat(0));
  const Rat inv = b.lc().inverse();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    const Rat c = r[k] * inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) {
      if (!b.coeffs()[j].is_zero()) r[k - db + j] -= c * b.coeffs()[j];
    }
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero_poly()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

QPoly monic(const QPoly& p) {
  if (p.is_zero_poly()) return p;
  return p.lc().inverse() * p;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero_poly()) {
    QPoly r = x % y;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b, s0(Rat(1)), s1, t0, t1(Rat(1));
  while (!r1.is_zero_poly()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero_poly()) {
    s = QPoly();
    t = QPoly();
    return r0;
  }
  const Rat inv = r0.lc().inverse();
  s = inv * s0;
  t = inv * t0;
  return inv * r0;
}

QPoly compose(const QPoly& p, const QPoly& q) {
  QPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + QPoly(p.coeffs()[i]);
  return acc;
}

Rat resultant(const QPoly& f, const QPoly& g) {
  if (f.is_zero_poly() || g.is_zero_poly()) return Rat(0);
  const int df = f.degree(), dg = g.degree();
  if (dg == 0) return pow(g.lc(), static_cast<unsigned>(df));
  if (df == 0) return pow(f.lc(), static_cast<unsigned>(dg));
  const QPoly r = f % g;
  if (r.is_zero_poly()) return Rat(0);
  Rat sign = ((df * dg) % 2) ? Rat(-1) : Rat(1);
  return sign * pow(g.lc(), static_cast<unsigned>(df - r.degree())) * resultant(g, r);
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() < 1) return out;
  const QPoly f = monic(p);
  const QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = exact_div(f, a);
  QPoly c = exact_div(fp, a);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() < 1) return QPoly(Rat(1));
  return exact_div(monic(p), gcd(p, p.derivative()));
}

Int integer_content_lcm_den(const QPoly& p) {
  Int l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  return l;
}

std::vector<Int> integer_coefficients(const QPoly& p) {
  const Int l = integer_content_lcm_den(p);
  std::vector<Int> out;
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Int v = c.num() * (l / c.den());
    g = gcd(g, v);
    out.push_back(v);
  }
  if (g == 0) return out;
  if (!p.is_zero_poly() && p.lc().sign() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

QPoly primitive_integer(const QPoly& p) {
  std::vector<Rat> c;
  for (const auto& v : integer_coefficients(p)) c.emplace_back(v);
  return QPoly(std::move(c));
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero_poly()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    Rat a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.str();
      continue;
    }
    if (!a.is_one()) os << a.str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

QPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return QPoly();
  if (m == 0) return pow(f.lc(), static_cast<unsigned>(n));
  if (n == 0) return pow(g.lc(), static_cast<unsigned>(m));
  const int size = m + n;
  std::vector<std::vector<QPoly>> s(size, std::vector<QPoly>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
  return bareiss_determinant(std::move(s));
}

std::pair<QPoly, QPoly> first_subresultant_y(const BiPoly& f, const BiPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n - 2;
  // Rows y^k f and y^k g; column c holds the coefficient of y^(m+n-2-c).
  std::vector<std::vector<QPoly>> rows;
  for (int k = n - 2; k >= 0; --k) {
    std::vector<QPoly> r(size + 1);
    for (int j = 0; j <= m; ++j) r[size - k - j] = f.coeff(j);
    rows.push_back(std::move(r));
  }
  for (int k = m - 2; k >= 0; --k) {
    std::vector<QPoly> r(size + 1);
    for (int j = 0; j <= n; ++j) r[size - k - j] = g.coeff(j);
    rows.push_back(std::move(r));
  }
  auto minor = [&](int last) {
    std::vector<std::vector<QPoly>> s(size, std::vector<QPoly>(size));
    for (int i = 0; i < size; ++i) {
      for (int c = 0; c + 1 < size; ++c) s[i][c] = rows[i][c];
      s[i][size - 1] = rows[i][last];
    }
    return bareiss_determinant(std::move(s));
  };
  if (size == 0) return {QPoly(), QPoly()};
  return {minor(size - 1), minor(size)};
}

QPoly content(const BiPoly& f) {
  QPoly g;
  for (const auto& c : f.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) return QPoly(Rat(1));
  }
  return g;
}

BiPoly primitive_part(const BiPoly& f) {
  if (f.is_zero_poly()) return f;
  const QPoly c = content(f);
  std::vector<QPoly> out;
  for (const auto& x : f.coeffs()) out.push_back(exact_div(x, c));
  BiPoly r(std::move(out));
  // Normalize: leading coefficient of leading coefficient is one.
  const Rat s = r.lc().lc();
  if (!s.is_one()) r = QPoly(s.inverse()) * r;
  return r;
}

BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  const int db = b.degree();
  const QPoly& lb = b.lc();
  while (!r.is_zero_poly() && r.degree() >= db) {
    const int k = r.degree() - db;
    const QPoly lr = r.lc();
    r = lb * r - (lr * b).shift(k);
  }
  return r;
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero_poly()) return primitive_part(b);
  if (b.is_zero_poly()) return primitive_part(a);
  const QPoly cg = gcd(content(a), content(b));
  // A specialization that keeps both degrees and has a trivial gcd proves
  // the primitive parts coprime.
  for (long x0 : {3L, -5L, 7L, 2L, -11L, 13L}) {
    const Rat r(x0);
    if (a.lc().eval(r).is_zero() || b.lc().eval(r).is_zero()) continue;
    if (gcd(eval_x(a, r), eval_x(b, r)).degree() == 0) return primitive_part(BiPoly(cg));
    break;
  }
  BiPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero_poly()) {
    if (y.degree() == 0) {
      x = BiPoly(QPoly(Rat(1)));
      break;
    }
    BiPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(cg * primitive_part(x));
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero_poly()) throw std::logic_error("exact_div: division by zero");
  BiPoly r = a;
  const int db = b.degree();
  std::vector<QPoly> q(a.degree() >= db ? a.degree() - db + 1 : 0);
  while (!r.is_zero_poly() && r.degree() >= db) {
    const int k = r.degree() - db;
    auto [c, rem] = divmod(r.lc(), b.lc());
    if (!rem.is_zero_poly()) throw std::logic_error("exact_div: not divisible");
    q[k] = c;
    r -= (c * b).shift(k);
  }
  if (!r.is_zero_poly()) throw std::logic_error("exact_div: nonzero remainder");
  return BiPoly(std::move(q));
}

BiPoly derivative_x(const BiPoly& f) {
  std::vector<QPoly> out;
  for (const auto& c : f.coeffs()) out.push_back(c.derivative());
  return BiPoly(std::move(out));
}

QPoly eval_x(const BiPoly& f, const Rat& x) {
  std::vector<Rat> out;
  for (const auto& c : f.coeffs()) out.push_back(c.eval(x));
  return QPoly(std::move(out));
}

QPoly eval_y(const BiPoly& f, const Rat& y) {
  QPoly acc;
  for (int i = f.degree(); i >= 0; --i) acc = y * acc + f.coeffs()[i];
  return acc;
}

}  // namespace curvekit
