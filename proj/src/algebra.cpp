#include "curvekit/algebra.hpp"

#include <map>
#include <stdexcept>

#include "curvekit/errors.hpp"

namespace curvekit {

ResidueRing::ResidueRing(QPoly modulus) : q_(monic(modulus)) {
  if (q_.degree() < 1) throw std::logic_error("residue ring modulus must have positive degree");
}

QPoly ResidueRing::inv(const QPoly& a) const {
  const QPoly r = reduce(a);
  if (r.is_zero_poly()) throw std::logic_error("inverse of zero in residue ring");
  QPoly s, t;
  const QPoly g = xgcd(r, q_, s, t);
  if (g.degree() > 0) throw ZeroDivisor{g};
  return reduce(s);
}

bool ResidueRing::is_zero(const QPoly& a) const {
  const QPoly r = reduce(a);
  if (r.is_zero_poly()) return true;
  const QPoly g = gcd(r, q_);
  if (g.degree() > 0) throw ZeroDivisor{g};
  return false;
}

void ktrim(const ResidueRing& k, KPoly& a) {
  for (auto& c : a) c = k.reduce(c);
  while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

KPoly kadd(const ResidueRing& k, const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  ktrim(k, r);
  return r;
}

KPoly ksub(const ResidueRing& k, const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  ktrim(k, r);
  return r;
}

KPoly kmul(const ResidueRing& k, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ktrim(k, r);
  return r;
}

KPoly kscale(const ResidueRing& k, const QPoly& s, const KPoly& a) {
  KPoly r = a;
  for (auto& c : r) c = c * s;
  ktrim(k, r);
  return r;
}

KPoly kmonic(const ResidueRing& k, KPoly a) {
  ktrim(k, a);
  if (a.empty()) return a;
  const QPoly li = k.inv(a.back());
  for (auto& c : a) c = k.mul(c, li);
  return a;
}

namespace {

// Quotient and remainder; b must be trimmed with an invertible leading term.
void kdivmod(const ResidueRing& k, KPoly a, const KPoly& b, KPoly* quo, KPoly* rem) {
  ktrim(k, a);
  const QPoly li = k.inv(b.back());
  const std::size_t db = b.size() - 1;
  KPoly q(a.size() >= b.size() ? a.size() - db : 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const QPoly c = k.mul(a.back(), li);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = k.reduce(a[shift + i] - c * b[i]);
    a.pop_back();
    ktrim(k, a);
  }
  if (quo) {
    ktrim(k, q);
    *quo = std::move(q);
  }
  if (rem) *rem = std::move(a);
}

}  // namespace

KPoly krem(const ResidueRing& k, KPoly a, KPoly b) {
  ktrim(k, b);
  if (b.empty()) throw std::logic_error("division by zero polynomial");
  KPoly r;
  kdivmod(k, std::move(a), b, nullptr, &r);
  return r;
}

KPoly kquo(const ResidueRing& k, KPoly a, KPoly b) {
  ktrim(k, b);
  if (b.empty()) throw std::logic_error("division by zero polynomial");
  KPoly q;
  kdivmod(k, std::move(a), b, &q, nullptr);
  return q;
}

KPoly kgcd(const ResidueRing& k, KPoly a, KPoly b) {
  ktrim(k, a);
  ktrim(k, b);
  while (!b.empty()) {
    KPoly r = krem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return kmonic(k, std::move(a));
}

KPoly kderivative(const ResidueRing& k, const KPoly& a) {
  if (a.size() <= 1) return {};
  KPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * a[i];
  ktrim(k, r);
  return r;
}

QPoly keval(const ResidueRing& k, const KPoly& a, const QPoly& x) {
  QPoly acc;
  for (std::size_t i = a.size(); i-- > 0;) acc = k.reduce(acc * x + a[i]);
  return acc;
}

std::vector<std::pair<KPoly, int>> ksquarefree(const ResidueRing& k, const KPoly& f0) {
  std::vector<std::pair<KPoly, int>> out;
  KPoly f = kmonic(k, f0);
  if (f.size() <= 1) return out;
  const KPoly df = kderivative(k, f);
  const KPoly a0 = kgcd(k, f, df);
  KPoly b = kquo(k, f, a0);
  KPoly c = kquo(k, df, a0);
  KPoly d = ksub(k, c, kderivative(k, b));
  for (int i = 1; b.size() > 1; ++i) {
    KPoly a = kgcd(k, b, d);
    if (a.size() > 1) out.emplace_back(a, i);
    b = kquo(k, b, a);
    c = kquo(k, d, a);
    d = ksub(k, c, kderivative(k, b));
  }
  return out;
}

int kvaluation(const ResidueRing& k, const KPoly& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!k.is_zero(a[i])) return static_cast<int>(i);
  return -1;
}

QPoly eval_at(const ResidueRing& k, const MultiPoly& f, const std::vector<QPoly>& point) {
  std::vector<std::vector<QPoly>> powers(point.size());
  for (std::size_t v = 0; v < point.size(); ++v) {
    powers[v].push_back(QPoly(Rat(1)));
    const int d = f.degree_in(v);
    for (int e = 1; e <= d; ++e) powers[v].push_back(k.mul(powers[v].back(), point[v]));
  }
  QPoly acc;
  for (const auto& [e, c] : f.terms()) {
    QPoly t(c);
    for (std::size_t v = 0; v < point.size(); ++v)
      if (e[v]) t = k.mul(t, powers[v][e[v]]);
    acc += t;
  }
  return k.reduce(acc);
}

ProjPoint PointBlock::point() const {
  if (!is_rational()) throw std::logic_error("block is not a rational point");
  const Rat root = -minpoly.coeffs()[0] / minpoly.coeffs()[1];
  return ProjPoint(coords[0].eval(root), coords[1].eval(root), coords[2].eval(root));
}

PointBlock PointBlock::restrict_to(const QPoly& factor) const {
  PointBlock b;
  b.minpoly = monic(factor);
  for (int i = 0; i < 3; ++i) b.coords[i] = coords[i] % b.minpoly;
  b.multiplicity = multiplicity;
  return b;
}

PointBlock rational_block(const ProjPoint& p, int multiplicity) {
  PointBlock b;
  b.minpoly = QPoly::variable();
  const auto r = p.rat();
  for (int i = 0; i < 3; ++i) b.coords[i] = QPoly(r[i]);
  b.multiplicity = multiplicity;
  return b;
}

namespace {

constexpr int kMaxShear = 32;

KPoly specialize(const ResidueRing& k, const BiPoly& b) {
  KPoly r;
  for (const auto& c : b.coeffs()) r.push_back(k.reduce(c));
  ktrim(k, r);
  return r;
}

bool top_y_constant(const MultiPoly& f) {
  Exponent e{};
  e[1] = static_cast<std::uint16_t>(f.total_degree());
  return !f.coeff(e).is_zero();
}

}  // namespace

MultiPoly ternary_gcd(const MultiPoly& f, const MultiPoly& g, Rng& rng) {
  const RatMatrix m = random_invertible(rng, 3, 3);
  RatMatrix3 m3 = m;
  const RatMatrix mi = *inverse(m3);
  const BiPoly bf = to_bipoly(linear_substitute(f, m));
  const BiPoly bg = to_bipoly(linear_substitute(g, m));
  const BiPoly h = gcd(bf, bg);
  int deg = 0;
  for (int j = 0; j <= h.degree(); ++j)
    if (!h.coeffs()[j].is_zero_poly()) deg = std::max(deg, j + h.coeffs()[j].degree());
  const MultiPoly hm = from_bipoly(h, deg, f.vars());
  return primitive_integer(linear_substitute(hm, mi));
}

std::vector<PointBlock> solve_pair(const MultiPoly& f, const MultiPoly& g, Rng& rng) {
  const int m = f.total_degree();
  const int n = g.total_degree();
  if (m <= 0 || n <= 0) return {};
  for (int attempt = 0; attempt < kMaxShear; ++attempt) {
    const RatMatrix mat = attempt == 0 ? RatMatrix(identity3()) : random_invertible(rng, 3, 2 + attempt / 4);
    const MultiPoly ff = linear_substitute(f, mat);
    const MultiPoly gg = linear_substitute(g, mat);
    if (!top_y_constant(ff) || !top_y_constant(gg)) continue;
    const BiPoly bf = to_bipoly(ff);
    const BiPoly bg = to_bipoly(gg);
    const QPoly res = resultant_y(bf, bg);
    if (res.is_zero_poly()) {
      const MultiPoly h = ternary_gcd(f, g, rng);
      throw CurveError(ErrorKind::CommonComponent, "curves share the component " + h.str());
    }
    if (res.degree() != m * n) continue;
    std::vector<PointBlock> blocks;
    bool good = true;
    std::optional<std::pair<QPoly, QPoly>> sub;
    if (bf.degree() >= 2 && bg.degree() >= 2) sub = first_subresultant_y(bf, bg);
    for (const auto& [sq, mult] : squarefree_decomposition(res)) {
      QPoly q = monic(sq);
      std::vector<std::pair<QPoly, std::optional<QPoly>>> pieces;
      if (sub) {
        // Where s1 is a unit the common root in y is -s0/s1.
        const QPoly bad = monic(gcd(sub->first % q, q));
        const QPoly easy = exact_div(q, bad);
        if (easy.degree() >= 1) {
          const ResidueRing k(easy);
          pieces.emplace_back(easy, k.reduce(Rat(-1) * k.reduce(sub->second) * k.inv(k.reduce(sub->first))));
        }
        q = bad;
      }
      if (q.degree() >= 1) {
        auto hard = split_apply<std::optional<QPoly>>(q, [&](const ResidueRing& k) -> std::optional<QPoly> {
          const KPoly h = kgcd(k, specialize(k, bf), specialize(k, bg));
          const int e = static_cast<int>(h.size()) - 1;
          if (e < 1) return std::nullopt;
          const QPoly eta = k.reduce(Rat(-1) * h[e - 1] * QPoly(Rat(1) / Rat(e)));
          KPoly lin{k.reduce(-eta), QPoly(Rat(1))};
          KPoly expect{QPoly(Rat(1))};
          for (int i = 0; i < e; ++i) expect = kmul(k, expect, lin);
          if (!ksub(k, h, expect).empty()) return std::nullopt;
          return eta;
        });
        pieces.insert(pieces.end(), hard.begin(), hard.end());
      }
      for (auto& [piece, eta] : pieces) {
        if (!eta) {
          good = false;
          break;
        }
        const QPoly theta = QPoly::variable();
        PointBlock b;
        b.minpoly = piece;
        for (int i = 0; i < 3; ++i) {
          const QPoly c = mat(i, 0) * theta + mat(i, 1) * *eta + QPoly(mat(i, 2));
          b.coords[i] = c % piece;
        }
        b.multiplicity = mult;
        blocks.push_back(std::move(b));
      }
      if (!good) break;
    }
    if (good) return blocks;
  }
  throw CurveError(ErrorKind::ShearExhausted, "no generic projection found for the intersection");
}

std::vector<PointBlock> split_rational(const std::vector<PointBlock>& blocks) {
  std::vector<PointBlock> out;
  for (const auto& b : blocks) {
    if (b.degree() == 1) {
      out.push_back(b);
      continue;
    }
    QPoly rest = b.minpoly;
    for (const Rat& r : rational_roots(b.minpoly)) {
      const QPoly lin(std::vector<Rat>{-r, Rat(1)});
      out.push_back(b.restrict_to(lin));
      rest = exact_div(rest, lin);
    }
    if (rest.degree() >= 1) out.push_back(b.restrict_to(rest));
  }
  return out;
}

std::vector<NumericPoint> numeric_points(const PointBlock& block, unsigned bits) {
  std::vector<NumericPoint> out;
  const auto roots = isolate_roots(block.minpoly, bits + 32);
  PrecisionGuard guard(bits + 64);
  for (const auto& r : roots) {
    std::array<Complex, 3> c;
    std::array<Real, 3> e;
    int big = 0;
    for (int i = 0; i < 3; ++i) {
      c[i] = eval(block.coords[i], r.z);
      e[i] = eval_error_bound(block.coords[i], r.z, r.radius);
      if (abs(c[i]) > abs(c[big])) big = i;
    }
    const Complex d = c[big];
    const Real ad = abs(d);
    Real err(0);
    NumericPoint p;
    for (int i = 0; i < 3; ++i) {
      p.coords[i] = c[i] / d;
      const Real bound = (e[i] * ad + abs(c[i]) * e[big]) / (ad * (ad - e[big]));
      if (bound > err) err = bound;
    }
    p.error = err;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace curvekit
