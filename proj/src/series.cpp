#include "curvekit/series.hpp"

#include <map>

#include "curvekit/errors.hpp"

namespace curvekit {

namespace {

MultiPoly homogenize_to(const MultiPoly& p, int d) {
  MultiPoly r(xyz_vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f[2] = static_cast<std::uint16_t>(d - curvekit::total_degree(e));
    r.add_term(f, c);
  }
  return r;
}

struct GaoSystem {
  RatMatrix frame;
  MultiPoly g;                    // dehomogenized form in the frame
  std::vector<Exponent> g_monos;  // unknowns of the first component
  RatMatrix kernel;
};

GaoSystem gao_system(const TernaryForm& f, Rng& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    RatMatrix frame = attempt == 0 ? RatMatrix(identity3()) : random_invertible(rng, 3, 5 + attempt);
    const MultiPoly big = linear_substitute(f.poly(), frame);
    const int n = f.degree();
    if (big.degree_in(0) != n || big.degree_in(1) != n) continue;
    if (gcd_of({big, big.partial(0)}, rng).total_degree() > 0) continue;
    GaoSystem s{frame, dehomogenize(big, 2), {}, {}};
    const MultiPoly& g = s.g;
    const int m = g.degree_in(0), nn = g.degree_in(1);
    std::vector<Exponent> hm;
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= nn; ++j) {
        Exponent e{};
        e[0] = static_cast<std::uint16_t>(i);
        e[1] = static_cast<std::uint16_t>(j);
        if (i <= m - 1) s.g_monos.push_back(e);
        if (j <= nn - 1) hm.push_back(e);
      }
    const MultiPoly gx = g.partial(0), gy = g.partial(1);
    std::vector<MultiPoly> cols;
    for (const auto& e : s.g_monos) {
      const MultiPoly u = MultiPoly::monomial(xyz_vars(), e, Rat(1));
      cols.push_back(g * u.partial(1) - u * gy);
    }
    for (const auto& e : hm) {
      const MultiPoly u = MultiPoly::monomial(xyz_vars(), e, Rat(1));
      cols.push_back(u * gx - g * u.partial(0));
    }
    std::map<Exponent, int, GrlexLess> row;
    for (const auto& c : cols)
      for (const auto& [e, v] : c.terms()) row.emplace(e, 0);
    int r = 0;
    for (auto& [e, idx] : row) idx = r++;
    RatMatrix mat = RatMatrix::Zero(std::max(r, 1), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [e, v] : cols[j].terms()) mat(row.at(e), static_cast<int>(j)) = v;
    s.kernel = nullspace(mat);
    return s;
  }
  throw CurveError(ErrorKind::ShearExhausted, "no frame separates the factors of the curve");
}

QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  QPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly basis(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * QPoly(std::vector<Rat>{-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    out += basis * (ys[i] / denom);
  }
  return out;
}

QPoly restrict_x(const MultiPoly& g, const Rat& x0) {
  QPoly out;
  for (const auto& [e, c] : g.terms()) out += QPoly::monomial(c * pow(x0, e[0]), e[1]);
  return out;
}

std::optional<MultiPoly> rational_factor(const TernaryForm& f, const GaoSystem& s, Rng& rng) {
  const int nn = s.g.degree_in(1);
  const MultiPoly gx = s.g.partial(0);
  const auto back = inverse(RatMatrix3(s.frame));
  for (int attempt = 0; attempt < 4; ++attempt) {
    MultiPoly sol(xyz_vars());
    for (std::size_t i = 0; i < s.g_monos.size(); ++i) {
      Rat c(0);
      for (int j = 0; j < s.kernel.cols(); ++j) c += s.kernel(static_cast<int>(i), j) * Rat(rng.uniform(-9, 9));
      if (!c.is_zero()) sol.add_term(s.g_monos[i], c);
    }
    if (sol.is_zero()) continue;
    const Rat x0(rng.uniform(-50, 50));
    const QPoly a = restrict_x(s.g, x0), b = restrict_x(sol, x0), d = restrict_x(gx, x0);
    if (a.degree() != nn) continue;
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= nn + 1; ++k) {
      xs.emplace_back(k);
      ys.push_back(resultant(a, b - d * Rat(k)));
    }
    const QPoly r = interpolate(xs, ys);
    if (is_zero(r)) continue;
    for (const Rat& lam : rational_roots(r)) {
      const MultiPoly cand = sol - gx * lam;
      if (cand.is_zero()) continue;
      const MultiPoly h = gcd_of({linear_substitute(f.poly(), s.frame), homogenize_to(cand, cand.total_degree())}, rng);
      if (h.total_degree() > 0 && h.total_degree() < f.degree())
        return primitive_integer(normalized(TernaryForm(linear_substitute(h, *back))).poly());
    }
  }
  return std::nullopt;
}

long tri(long a) { return a * (a - 1) / 2; }

bool simple_cusp(const SingularPoint& s) { return s.kind == SingularKind::Cusp && s.contact == 3; }

}  // namespace

int absolute_factor_count(const TernaryForm& f, Rng& rng) {
  if (f.degree() <= 1) return 1;
  return static_cast<int>(gao_system(f, rng).kernel.cols());
}

void require_irreducible(const TernaryForm& f, Rng& rng) {
  if (auto rep = repeated_factor(f.poly(), rng))
    throw CurveError(ErrorKind::Reducible, "repeated factor " + rep->str());
  if (f.degree() <= 1) return;
  const GaoSystem s = gao_system(f, rng);
  const long k = s.kernel.cols();
  if (k == 1) return;
  if (auto h = rational_factor(f, s, rng))
    throw CurveError(ErrorKind::Reducible, "factor " + h->str() + " (" + std::to_string(k) + " absolutely irreducible factors)");
  throw CurveError(ErrorKind::Reducible, std::to_string(k) + " conjugate absolutely irreducible factors, none over Q");
}

std::optional<long> ordinary_genus(const TernaryForm& f, Rng& rng, GenusReport* report) {
  const long m = f.degree();
  std::map<int, long> by_mult;
  long cusps = 0;
  for (const auto& s : classify_singularities(f, rng, 0)) {
    if (simple_cusp(s)) {
      cusps += s.count();
    } else if (is_ordinary(s)) {
      by_mult[s.multiplicity] += s.count();
    } else {
      return std::nullopt;
    }
  }
  long p = (m - 1) * (m - 2) / 2 - cusps;
  for (const auto& [a, c] : by_mult) p -= c * tri(a);
  if (report) {
    report->m = static_cast<int>(m);
    report->ordinary_contributions.assign(by_mult.rbegin(), by_mult.rend());
    report->simple_cusps = cusps;
    report->p = p;
  }
  return p;
}

GenusReport genus(const TernaryForm& f, Rng& rng) {
  require_irreducible(f, rng);
  GenusReport rep;
  if (ordinary_genus(f, rng, &rep)) return rep;
  const Resolution res = resolve(f, rng);
  if (!ordinary_genus(res.final_curve, rng, &rep))
    throw CurveError(ErrorKind::IterationCap, "resolved model still has non-ordinary points");
  rep.resolution_steps = static_cast<int>(res.steps.size());
  rep.model = res.final_curve;
  return rep;
}

LinearSystemReport adjoint_system(const TernaryForm& f, int k, Rng& rng) {
  std::vector<LinearCondition> conds;
  for (const auto& s : classify_singularities(f, rng, 0)) {
    if (!is_ordinary(s) && !simple_cusp(s))
      throw CurveError(ErrorKind::PreconditionViolated, "adjoints need ordinary singularities; resolve the curve first");
    conds.emplace_back(s.block, s.multiplicity - 1);
  }
  if (k < 0) {
    LinearSystemReport r;
    r.degree = k;
    r.conditions = conds;
    r.effective_dim = -1;
    r.virtual_dim = -1;
    for (const auto& c : conds) r.virtual_dim -= c.equations();
    r.superabundance = r.effective_dim - r.virtual_dim;
    return r;
  }
  return system_dimension(k, conds);
}

SeriesDescriptor cut_series(const TernaryForm& f, const LinearSystemReport& sys, Rng& rng) {
  if (sys.basis.empty()) throw CurveError(ErrorKind::AllMembersContainCurve, "the system is empty");
  const int k = sys.degree, n = f.degree();
  const auto monos = monomials_of_degree(3, k);
  auto vec = [&](const MultiPoly& p) {
    std::vector<Rat> v;
    for (const auto& e : monos) v.push_back(p.coeff(e));
    return v;
  };
  std::vector<std::vector<Rat>> span;
  for (const auto& b : sys.basis) span.push_back(vec(b.poly()));
  const long dim_v = rank(from_rows(span, static_cast<int>(monos.size())));
  long dim_w = 0;
  if (k >= n) {
    for (const auto& e : monomials_of_degree(3, k - n)) span.push_back(vec(f.poly() * MultiPoly::monomial(xyz_vars(), e, Rat(1))));
    dim_w = static_cast<long>(monomials_of_degree(3, k - n).size());
  }
  const long dim_sum = rank(from_rows(span, static_cast<int>(monos.size())));
  const long inside = dim_v + dim_w - dim_sum;
  if (inside == dim_v) throw CurveError(ErrorKind::AllMembersContainCurve, "every member of the system contains the curve");
  SeriesDescriptor out;
  out.dimension = sys.effective_dim - inside;
  if (k == 0) return out;

  auto fixed_part = [&](const TernaryForm& g) {
    long fixed = 0;
    for (const auto& r : intersect(f, g, rng, 0)) {
      for (const auto& [piece, base] : split_apply<bool>(r.block.minpoly, [&](const ResidueRing& kk) {
             const auto pt = r.block.restrict_to(kk.modulus()).coord_vector();
             for (const auto& b : sys.basis)
               if (!kk.is_zero(eval_at(kk, b.poly(), pt))) return false;
             return true;
           }))
        if (base) fixed += piece.degree() * r.local_multiplicity;
    }
    return fixed;
  };
  std::optional<long> fixed;
  for (int found = 0, attempt = 0; found < 2 && attempt < 20; ++attempt) {
    MultiPoly g(xyz_vars());
    for (const auto& b : sys.basis) g += b.poly() * Rat(rng.uniform(-30, 30));
    if (g.is_zero() || try_divide(g, f.poly())) continue;
    try {
      const long v = fixed_part(TernaryForm(g));
      fixed = fixed ? std::min(*fixed, v) : v;
      ++found;
    } catch (const CurveError& e) {
      if (e.kind() != ErrorKind::CommonComponent) throw;
    }
  }
  if (!fixed) throw CurveError(ErrorKind::AllMembersContainCurve, "no member meets the curve properly");
  out.order = static_cast<long>(n) * k - *fixed;
  return out;
}

CanonicalReport canonical_series(const TernaryForm& f, Rng& rng) {
  const GenusReport g = genus(f, rng);
  if (g.p == 0) throw CurveError(ErrorKind::NoCanonical, "a rational curve has no canonical series");
  const TernaryForm model = g.model ? *g.model : f;
  const auto adj = adjoint_system(model, model.degree() - 3, rng);
  CanonicalReport out{cut_series(model, adj, rng), g.p, 0, model};
  out.epsilon = (g.p - 1) - out.series.dimension;
  out.series.complete = true;
  out.series.speciality_index = 1;
  return out;
}

std::pair<long, long> series_formulas(long m, long p, long i) {
  if (i < 3) throw CurveError(ErrorKind::PreconditionViolated, "the formulas hold for i >= 3");
  return {2 * p - 2 + m * i, p - 2 + m * i};
}

namespace {

MultiPoly chart_poly(const MultiPoly& f, int pivot, const std::array<Rat, 3>& p) {
  // f(p + du e_a + dv e_b) with the pivot coordinate held at p[pivot].
  int a = pivot == 0 ? 1 : 0, b = pivot == 2 ? 1 : 2;
  const VarList uv = make_vars({"u", "v"});
  std::vector<MultiPoly> img(3);
  img[pivot] = MultiPoly(uv, p[pivot]);
  img[a] = MultiPoly(uv, p[a]) + MultiPoly::variable(uv, 0);
  img[b] = MultiPoly(uv, p[b]) + MultiPoly::variable(uv, 1);
  return f.substitute(img);
}

}  // namespace

long riemann_roch_conditions(const TernaryForm& f, const std::vector<GroupPoint>& group, Rng& rng) {
  const int m = f.degree();
  std::vector<std::array<Rat, 3>> sing;
  for (const auto& s : classify_singularities(f, rng, 0))
    if (s.point) sing.push_back(s.point->rat());
  const auto adj = adjoint_system(f, m - 3, rng);
  if (adj.basis.empty()) return 0;
  std::vector<std::vector<Rat>> rows;
  for (const auto& gp : group) {
    const auto p = gp.point.rat();
    if (!f.eval(p).is_zero()) throw CurveError(ErrorKind::GroupOffCurve, "point " + gp.point.str() + " is not on the curve");
    if (multiplicity_at(f, gp.point) > 1)
      throw CurveError(ErrorKind::PreconditionViolated, "group point " + gp.point.str() + " is singular");
    const int pivot = chart_pivot(gp.point);
    std::array<Rat, 3> pn = p;
    for (auto& c : pn) c /= p[pivot];
    const MultiPoly local = chart_poly(f.poly(), pivot, pn);
    // dependent variable: the one with nonzero linear coefficient
    const Rat fu = local.coeff({1, 0}), fv = local.coeff({0, 1});
    const bool solve_v = !fv.is_zero();
    const int mu = gp.multiplicity;
    // v = sum s_k u^k, determined term by term
    std::vector<Rat> s(mu, Rat(0));
    const VarList t = make_vars({"t"});
    auto param = [&](const std::vector<Rat>& ser) {
      MultiPoly dep(t);
      for (int k = 1; k < static_cast<int>(ser.size()); ++k)
        if (!ser[k].is_zero()) dep.add_term({static_cast<std::uint16_t>(k)}, ser[k]);
      const MultiPoly ind = MultiPoly::variable(t, 0);
      return solve_v ? std::vector<MultiPoly>{ind, dep} : std::vector<MultiPoly>{dep, ind};
    };
    const Rat lin = solve_v ? fv : fu;
    for (int k = 1; k < mu; ++k) {
      const MultiPoly val = local.substitute(param(s));
      s[k] = -val.coeff({static_cast<std::uint16_t>(k)}) / lin;
    }
    const auto img = param(s);
    // rows: coefficients of t^0..t^(mu-1) of each basis member along the branch
    std::vector<std::vector<Rat>> block(mu, std::vector<Rat>(adj.basis.size()));
    for (std::size_t j = 0; j < adj.basis.size(); ++j) {
      const MultiPoly lb = chart_poly(adj.basis[j].poly(), pivot, pn).substitute(img);
      for (int k = 0; k < mu; ++k) block[k][j] = lb.coeff({static_cast<std::uint16_t>(k)});
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  if (rows.empty()) return 0;
  return rank(from_rows(rows, static_cast<int>(adj.basis.size())));
}

long pencil_double_points(long n, long p) { return 2 * (n + p - 1); }
long series_multiple_points(long r, long n, long p) { return (r + 1) * (n + r * p - r); }

std::string to_string(ProjectionVerdict v) { return v == ProjectionVerdict::Projection ? "projection" : "not_projection"; }

ProjectionReport projection_completeness_test(const TernaryForm& f, Rng& rng) {
  ProjectionReport out;
  out.n = f.degree();
  const GenusReport g = genus(f, rng);
  out.p = g.p;
  if (out.n - out.p > 2) {
    out.verdict = ProjectionVerdict::Projection;
    return out;
  }
  const TernaryForm model = g.model ? *g.model : f;
  out.adjoints = adjoint_system(model, static_cast<int>(model.degree()) - 4, rng);
  out.verdict = out.adjoints->superabundance > 0 ? ProjectionVerdict::Projection : ProjectionVerdict::NotProjection;
  return out;
}

}  // namespace curvekit
