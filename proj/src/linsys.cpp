#include "curvekit/linsys.hpp"

#include <algorithm>
#include <map>

#include "curvekit/errors.hpp"

namespace curvekit {

namespace {

long binom2(long k) { return k >= 0 ? (k + 2) * (k + 1) / 2 : 0; }

// Falling factorial coefficient of d^a x^e.
Rat falling(const Exponent& e, const Exponent& a) {
  Rat c(1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < a[i]; ++j) c *= Rat(e[i] - j);
  return c;
}

void append_rows(std::vector<std::vector<Rat>>& rows, const std::vector<Exponent>& monos, const PointBlock& b, int m,
                 int n) {
  const ResidueRing k(b.minpoly);
  std::array<std::vector<QPoly>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(QPoly(Rat(1)));
    for (int j = 1; j <= n; ++j) pw[i].push_back(k.mul(pw[i].back(), k.reduce(b.coords[i])));
  }
  const int deg = b.degree();
  for (const auto& a : monomials_of_degree(3, m - 1)) {
    std::vector<std::vector<Rat>> block(deg, std::vector<Rat>(monos.size()));
    for (std::size_t c = 0; c < monos.size(); ++c) {
      const auto& e = monos[c];
      if (e[0] < a[0] || e[1] < a[1] || e[2] < a[2]) continue;
      QPoly v = k.mul(k.mul(pw[0][e[0] - a[0]], pw[1][e[1] - a[1]]), pw[2][e[2] - a[2]]);
      v = v * falling(e, a);
      for (int j = 0; j < deg; ++j) block[j][c] = v.coeff(j);
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
}

int block_multiplicity(const MultiPoly& f, const PointBlock& b) {
  int best = -1;
  for (const auto& [piece, m] : split_apply<int>(b.minpoly, [&](const ResidueRing& k) {
         const PointBlock r = b.restrict_to(k.modulus());
         return local_data(k, f, r.coord_vector()).multiplicity;
       })) {
    (void)piece;
    best = best < 0 ? m : std::min(best, m);
  }
  return best;
}

std::string describe(const IntersectionRecord& r) {
  if (r.point) return r.point->str();
  return "conjugate block with minimal polynomial " + to_string(r.block.minpoly, "t");
}

}  // namespace

RatMatrix condition_matrix(int n, const std::vector<LinearCondition>& conditions) {
  const auto monos = monomials_of_degree(3, n);
  std::vector<std::vector<Rat>> rows;
  for (const auto& c : conditions) {
    if (c.multiplicity < 1) throw CurveError(ErrorKind::PreconditionViolated, "condition multiplicity must be at least 1");
    if (c.multiplicity > n + 1) {
      // Only the zero form vanishes to this order; the partials of order m-1
      // beyond n are identically zero, so use every coefficient instead.
      for (std::size_t i = 0; i < monos.size(); ++i) {
        std::vector<Rat> r(monos.size());
        r[i] = Rat(1);
        rows.push_back(std::move(r));
      }
      continue;
    }
    append_rows(rows, monos, c.point, c.multiplicity, n);
  }
  return from_rows(rows, static_cast<int>(monos.size()));
}

LinearSystemReport system_dimension(int n, const std::vector<LinearCondition>& conditions) {
  if (n < 0) throw CurveError(ErrorKind::PreconditionViolated, "degree must be nonnegative");
  LinearSystemReport rep;
  rep.degree = n;
  rep.conditions = conditions;
  const long total = binom2(n);
  long eqs = 0;
  for (const auto& c : conditions) eqs += c.equations();
  rep.virtual_dim = total - 1 - eqs;
  const auto monos = monomials_of_degree(3, n);
  const RatMatrix kernel = nullspace(condition_matrix(n, conditions));
  rep.effective_dim = static_cast<long>(kernel.cols()) - 1;
  rep.superabundance = rep.effective_dim - rep.virtual_dim;
  for (int j = 0; j < kernel.cols(); ++j) {
    MultiPoly p(xyz_vars());
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (!kernel(static_cast<int>(i), j).is_zero()) p.add_term(monos[i], kernel(static_cast<int>(i), j));
    rep.basis.emplace_back(primitive_integer(p));
  }
  return rep;
}

ProjPoint ninth_base_point(const std::vector<ProjPoint>& eight, Rng& rng) {
  if (eight.size() != 8) throw CurveError(ErrorKind::PreconditionViolated, "exactly eight points are required");
  std::vector<LinearCondition> conds(eight.begin(), eight.end());
  const auto rep = system_dimension(3, conds);
  if (rep.effective_dim != 1)
    throw CurveError(ErrorKind::DependentConditions, "the eight points impose only " + std::to_string(9 - rep.effective_dim) +
                                                         " conditions on cubics");
  std::vector<IntersectionRecord> recs;
  try {
    recs = intersect(rep.basis[0], rep.basis[1], rng, 0);
  } catch (const CurveError& e) {
    if (e.kind() != ErrorKind::CommonComponent) throw;
    throw CurveError(ErrorKind::DependentConditions, "every cubic through the eight points shares a component");
  }
  std::map<ProjPoint, int> left;
  std::vector<ProjPoint> order;
  for (const auto& r : recs) {
    if (!r.point) throw CurveError(ErrorKind::DependentConditions, "residual intersection is not a single rational point");
    left[*r.point] += r.local_multiplicity;
    order.push_back(*r.point);
  }
  for (const auto& p : eight) {
    auto it = left.find(p);
    if (it == left.end() || it->second == 0)
      throw CurveError(ErrorKind::DependentConditions, "point " + p.str() + " is not a base point");
    --it->second;
  }
  for (const auto& p : order)
    if (left[p] > 0) return p;
  throw CurveError(ErrorKind::DependentConditions, "no residual base point");
}

NoetherDecomposition noether_decompose(const TernaryForm& f, const TernaryForm& phi, const TernaryForm& psi, Rng& rng) {
  if (ternary_gcd(phi.poly(), psi.poly(), rng).total_degree() > 0)
    throw CurveError(ErrorKind::HypothesisFailed, "phi and psi share a component");
  const int n = f.degree(), p = phi.degree(), q = psi.degree();
  std::vector<const IntersectionRecord*> contact;
  const auto recs = intersect(phi, psi, rng, 0);
  for (const auto& r : recs) {
    const int a = block_multiplicity(phi.poly(), r.block);
    const int b = block_multiplicity(psi.poly(), r.block);
    if (r.local_multiplicity > a * b) {
      contact.push_back(&r);
      continue;
    }
    const int have = block_multiplicity(f.poly(), r.block);
    if (have < a + b - 1)
      throw CurveError(ErrorKind::HypothesisFailed, "f has multiplicity " + std::to_string(have) + " at " + describe(r) +
                                                        ", needs " + std::to_string(a + b - 1));
  }
  const auto fm = monomials_of_degree(3, n);
  const auto am = n - p >= 0 ? monomials_of_degree(3, n - p) : std::vector<Exponent>{};
  const auto bm = n - q >= 0 ? monomials_of_degree(3, n - q) : std::vector<Exponent>{};
  std::map<Exponent, int> row_of;
  for (std::size_t i = 0; i < fm.size(); ++i) row_of[fm[i]] = static_cast<int>(i);
  const int cols = static_cast<int>(am.size() + bm.size());
  RatMatrix m = RatMatrix::Zero(static_cast<int>(fm.size()), std::max(cols, 1));
  auto fill = [&](const std::vector<Exponent>& monos, const MultiPoly& g, int offset) {
    for (std::size_t j = 0; j < monos.size(); ++j)
      for (const auto& [e, c] : g.terms()) {
        Exponent s{};
        for (int i = 0; i < 3; ++i) s[i] = static_cast<std::uint16_t>(e[i] + monos[j][i]);
        m(row_of.at(s), offset + static_cast<int>(j)) += c;
      }
  };
  fill(am, phi.poly(), 0);
  fill(bm, psi.poly(), static_cast<int>(am.size()));
  RatVector rhs(static_cast<int>(fm.size()));
  for (std::size_t i = 0; i < fm.size(); ++i) rhs(static_cast<int>(i)) = f.poly().coeff(fm[i]);
  const auto sol = cols > 0 ? solve(m, rhs) : std::nullopt;
  if (!sol) {
    if (!contact.empty())
      throw CurveError(ErrorKind::HypothesisFailed,
                       "f is not in the ideal; phi and psi are tangent at " + describe(*contact.front()));
    throw CurveError(ErrorKind::NoSolution, "linear system for A and B is inconsistent");
  }
  NoetherDecomposition out;
  out.residual_freedom = cols - rank(m);
  auto build = [&](const std::vector<Exponent>& monos, int offset) -> std::optional<TernaryForm> {
    MultiPoly g(xyz_vars());
    for (std::size_t j = 0; j < monos.size(); ++j) g.add_term(monos[j], (*sol)(offset + static_cast<int>(j)));
    if (g.is_zero()) return std::nullopt;
    return TernaryForm(g);
  };
  out.a = build(am, 0);
  out.b = build(bm, static_cast<int>(am.size()));
  return out;
}

MultiPoly noether_expand(const NoetherDecomposition& d, const TernaryForm& phi, const TernaryForm& psi) {
  MultiPoly s(xyz_vars());
  if (d.a) s += d.a->poly() * phi.poly();
  if (d.b) s += d.b->poly() * psi.poly();
  return s;
}

Regularity regularity_threshold(int p, int q, int n) {
  if (p < 1 || q < 1) throw CurveError(ErrorKind::PreconditionViolated, "p and q must be positive");
  auto tri = [](long k) { return k > 0 ? k * (k - 1) / 2 : 0L; };
  Regularity r;
  r.regular = n >= p + q - 2;
  r.superabundance = tri(p + q - n - 1) - tri(p - n - 1) - tri(q - n - 1);
  return r;
}

FixedPoints chasles_fixed_points(const MultiPoly& corr, unsigned bits) {
  if (corr.nvars() != 2) throw CurveError(ErrorKind::PreconditionViolated, "correspondence must be bivariate");
  FixedPoints out;
  out.m = corr.degree_in(0);
  out.n = corr.degree_in(1);
  QPoly d;
  for (const auto& [e, c] : corr.terms()) d += QPoly::monomial(c, e[0] + e[1]);
  if (is_zero(d)) throw CurveError(ErrorKind::DiagonalContained, "the correspondence contains the identity");
  out.diagonal = d;
  out.roots = locate_roots(d, bits);
  out.roots.infinity_multiplicity = out.m + out.n - d.degree();
  out.count = out.roots.total() + out.roots.infinity_multiplicity;
  return out;
}

DoublePoints involution_double_points(const BinaryForm& f, const BinaryForm& phi, unsigned bits) {
  if (f.degree() != phi.degree()) throw CurveError(ErrorKind::PreconditionViolated, "forms differ in degree");
  const int n = f.degree();
  const MultiPoly j = f.poly().partial(0) * phi.poly().partial(1) - f.poly().partial(1) * phi.poly().partial(0);
  if (j.is_zero()) throw CurveError(ErrorKind::ProportionalForms, "the two forms are proportional");
  DoublePoints out{2 * (n - 1), BinaryForm(j, 2 * (n - 1)), {}};
  const QPoly d = out.jacobian.dehomogenize();
  out.roots = locate_roots(d, bits);
  out.roots.infinity_multiplicity = 2 * (n - 1) - d.degree();
  return out;
}

}  // namespace curvekit
