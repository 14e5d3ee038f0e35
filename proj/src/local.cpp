#include "curvekit/local.hpp"

#include <algorithm>
#include <functional>

#include "curvekit/errors.hpp"

namespace curvekit {

namespace {

std::vector<QPoly> to_ring(const ProjPoint& p) {
  const auto r = p.rat();
  return {QPoly(r[0]), QPoly(r[1]), QPoly(r[2])};
}

const ResidueRing& rational_ring() {
  static const ResidueRing k(QPoly::variable());
  return k;
}

Rat inverse_factorial(int n) { return Rat(1) / Rat(factorial(static_cast<unsigned>(n))); }

std::array<int, 2> others(int pivot) {
  if (pivot == 0) return {1, 2};
  if (pivot == 1) return {0, 2};
  return {0, 1};
}

}  // namespace

int line_contact(const ResidueRing& k, const MultiPoly& f, const std::vector<QPoly>& p, const std::vector<QPoly>& d) {
  std::vector<KPoly> lin(3);
  for (int i = 0; i < 3; ++i) {
    lin[i] = {p[i], d[i]};
    ktrim(k, lin[i]);
  }
  KPoly acc;
  for (const auto& [e, c] : f.terms()) {
    KPoly t{QPoly(c)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < e[i]; ++j) t = kmul(k, t, lin[i]);
    acc = kadd(k, acc, t);
  }
  return kvaluation(k, acc);
}

LocalData local_data(const ResidueRing& k, const MultiPoly& f, const std::vector<QPoly>& point) {
  LocalData out;
  out.pivot = 2;
  while (out.pivot >= 0 && k.is_zero(point[out.pivot])) --out.pivot;
  if (out.pivot < 0) throw std::logic_error("point with all coordinates zero");
  const auto [a, b] = others(out.pivot);
  const int n = f.total_degree();
  // Coefficient of s^i t^j in f(P + s e_a + t e_b) is the (i,j) Taylor term.
  std::vector<std::vector<MultiPoly>> da(n + 1);
  da[0].push_back(f);
  for (int i = 1; i <= n; ++i) da[i].push_back(da[i - 1][0].partial(a));
  for (int d = 0; d <= n; ++d) {
    KPoly cone(d + 1);
    bool any = false;
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      MultiPoly g = da[i][0];
      for (int q = 0; q < j; ++q) g = g.partial(b);
      if (g.is_zero()) continue;
      QPoly v = eval_at(k, g, point);
      v = k.reduce(inverse_factorial(i) * inverse_factorial(j) * v);
      cone[i] = v;
      if (!k.is_zero(v)) any = true;
    }
    if (!any) continue;
    out.multiplicity = d;
    ktrim(k, cone);
    out.cone = cone;
    break;
  }
  if (out.multiplicity == 0) {
    if (f.is_zero()) throw std::logic_error("zero polynomial");
    return out;
  }
  const int r = out.multiplicity;
  const int finite = static_cast<int>(out.cone.size()) - 1;
  if (r - finite > 0) out.profile.push_back(r - finite);
  for (const auto& [factor, m] : ksquarefree(k, out.cone))
    for (std::size_t q = 1; q < factor.size(); ++q) out.profile.push_back(m);
  std::sort(out.profile.rbegin(), out.profile.rend());
  if (out.profile.size() == 1 && r >= 2) {
    // Single tangent direction: (s - rho t)^r, or t^r when at infinity.
    std::vector<QPoly> dir(3, QPoly());
    dir[out.pivot] = QPoly();
    if (finite == 0) {
      dir[a] = QPoly(Rat(1));
    } else {
      const QPoly rho = k.div(Rat(-1) * out.cone[r - 1], Rat(r) * out.cone[r]);
      dir[a] = rho;
      dir[b] = QPoly(Rat(1));
    }
    out.contact = line_contact(k, f, point, dir);
  }
  return out;
}

VarList chart_vars(int pivot) {
  static const VarList yz = make_vars({"y", "z"});
  static const VarList xz = make_vars({"x", "z"});
  static const VarList xy = make_vars({"x", "y"});
  return pivot == 0 ? yz : (pivot == 1 ? xz : xy);
}

int chart_pivot(const ProjPoint& p) {
  for (int i = 2; i >= 0; --i)
    if (p.coords()[i] != 0) return i;
  return 2;
}

int multiplicity_at(const TernaryForm& f, const ProjPoint& p) {
  return local_data(rational_ring(), f.poly(), to_ring(p)).multiplicity;
}

TangentCone tangent_cone(const TernaryForm& f, const ProjPoint& p) {
  const LocalData d = local_data(rational_ring(), f.poly(), to_ring(p));
  if (d.multiplicity == 0) throw CurveError(ErrorKind::DomainError, "point " + p.str() + " is not on the curve");
  const VarList v = chart_vars(d.pivot);
  MultiPoly form(v);
  for (std::size_t i = 0; i < d.cone.size(); ++i) {
    if (d.cone[i].is_zero_poly()) continue;
    Exponent e{};
    e[0] = static_cast<std::uint16_t>(i);
    e[1] = static_cast<std::uint16_t>(d.multiplicity - static_cast<int>(i));
    form.add_term(e, d.cone[i].coeff(0));
  }
  return TangentCone{BinaryForm(form, d.multiplicity), d.profile};
}

TernaryForm tangent_line(const TernaryForm& f, const ProjPoint& p) {
  const auto pt = p.rat();
  MultiPoly l(f.poly().vars());
  for (int i = 0; i < 3; ++i) l += MultiPoly::variable(f.poly().vars(), i) * f.partial(i).eval({pt[0], pt[1], pt[2]});
  if (l.is_zero()) throw CurveError(ErrorKind::SingularPoint, "point " + p.str() + " is singular");
  return TernaryForm(l);
}

std::string to_string(SingularKind k) {
  switch (k) {
    case SingularKind::Node: return "node";
    case SingularKind::Cusp: return "cusp";
    case SingularKind::OrdinaryRFold: return "ordinary_rfold";
    case SingularKind::NonOrdinary: return "non_ordinary";
  }
  return "non_ordinary";
}

namespace {

SingularKind kind_of(int r, int distinct) {
  if (r == 2 && distinct == 2) return SingularKind::Node;
  if (r == 2 && distinct == 1) return SingularKind::Cusp;
  if (distinct == r) return SingularKind::OrdinaryRFold;
  return SingularKind::NonOrdinary;
}

}  // namespace

std::vector<SingularPoint> classify_singularities(const TernaryForm& f, Rng& rng, unsigned bits) {
  SingularityWitness w;
  try {
    w = curve_is_singular(f, rng);
  } catch (const CurveError& e) {
    if (e.kind() == ErrorKind::NotACurve) throw CurveError(ErrorKind::NotSquarefree, e.what());
    throw;
  }
  std::vector<SingularPoint> out;
  for (const auto& b : w.points) {
    auto pieces = split_apply<LocalData>(b.minpoly, [&](const ResidueRing& k) {
      return local_data(k, f.poly(), b.coord_vector());
    });
    for (const auto& [piece, d] : pieces) {
      SingularPoint s;
      s.block = b.restrict_to(piece);
      s.multiplicity = d.multiplicity;
      s.profile = d.profile;
      s.distinct_tangents = static_cast<int>(d.profile.size());
      s.kind = kind_of(s.multiplicity, s.distinct_tangents);
      s.contact = d.contact;
      if (s.block.is_rational()) {
        s.point = s.block.point();
        s.tangent_cone = tangent_cone(f, *s.point).form;
      } else if (bits > 0) {
        s.numeric = numeric_points(s.block, bits);
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

MultiPoly hessian_determinant(const MultiPoly& f) {
  std::vector<std::vector<MultiPoly>> h(3, std::vector<MultiPoly>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = f.partial(i).partial(j);
  MultiPoly det(f.vars());
  det += h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]);
  det -= h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]);
  det += h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  return det;
}

bool is_flex(const TernaryForm& f, const ProjPoint& p) {
  const int m = multiplicity_at(f, p);
  if (m == 0) throw CurveError(ErrorKind::DomainError, "point " + p.str() + " is not on the curve");
  if (m >= 2) throw CurveError(ErrorKind::SingularPoint, "point " + p.str() + " has multiplicity " + std::to_string(m));
  const auto pt = p.rat();
  return hessian_determinant(f.poly()).eval({pt[0], pt[1], pt[2]}).is_zero();
}

std::vector<IntersectionRecord> intersect(const TernaryForm& f, const TernaryForm& g, Rng& rng, unsigned bits) {
  std::vector<IntersectionRecord> out;
  for (auto& b : split_rational(solve_pair(f.poly(), g.poly(), rng))) {
    IntersectionRecord r;
    r.local_multiplicity = b.multiplicity;
    r.block = std::move(b);
    if (r.block.is_rational())
      r.point = r.block.point();
    else if (bits > 0)
      r.numeric = numeric_points(r.block, bits);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const IntersectionRecord& a, const IntersectionRecord& b) {
    if (a.point && b.point) return *a.point < *b.point;
    return a.point.has_value() && !b.point.has_value();
  });
  return out;
}

int intersection_multiplicity(const TernaryForm& f, const TernaryForm& g, const ProjPoint& p, Rng& rng) {
  const auto pt = p.rat();
  const std::vector<Rat> v{pt[0], pt[1], pt[2]};
  if (!f.poly().eval(v).is_zero() || !g.poly().eval(v).is_zero()) return 0;
  MultiPoly a = f.poly(), b = g.poly();
  std::vector<PointBlock> blocks;
  try {
    blocks = solve_pair(a, b, rng);
  } catch (const CurveError& e) {
    if (e.kind() != ErrorKind::CommonComponent) throw;
    const MultiPoly h = gcd_of({a, b}, rng);
    if (h.eval(v).is_zero()) throw CurveError(ErrorKind::CommonComponent, "common component " + h.str() + " passes through " + p.str());
    a = exact_div(a, h);
    b = exact_div(b, h);
    blocks = solve_pair(a, b, rng);
  }
  for (const auto& bl : blocks) {
    const ResidueRing k(bl.minpoly);
    // The point lies in this block when its coordinates are proportional.
    const QPoly x = QPoly(v[0]), y = QPoly(v[1]), z = QPoly(v[2]);
    const auto& c = bl.coords;
    const QPoly m1 = k.reduce(c[0] * y - c[1] * x);
    const QPoly m2 = k.reduce(c[0] * z - c[2] * x);
    const QPoly m3 = k.reduce(c[1] * z - c[2] * y);
    const QPoly common = gcd(gcd(gcd(bl.minpoly, m1), m2), m3);
    if (common.degree() >= 1) return bl.multiplicity;
  }
  return 0;
}

int bezout_total(const std::vector<IntersectionRecord>& records) {
  int s = 0;
  for (const auto& r : records) s += r.count() * r.local_multiplicity;
  return s;
}

}  // namespace curvekit
