#include "curvekit/plucker.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "curvekit/errors.hpp"

namespace curvekit {

VarList plucker_vars() {
  static const VarList v = make_vars({"n", "nu", "d", "kappa", "delta", "rho", "p"});
  return v;
}

const std::vector<CharacterRelation>& plucker_relations() {
  static const std::vector<CharacterRelation> rels = [] {
    const VarList v = plucker_vars();
    auto rel = [&](const char* name, const char* expr) { return CharacterRelation{name, parse(expr, v)}; };
    return std::vector<CharacterRelation>{
        rel("genus: p = (n-1)(n-2)/2 - d - kappa", "2*p - (n-1)*(n-2) + 2*d + 2*kappa"),
        rel("class: nu = n(n-1) - 2d - 3kappa", "nu - n*(n-1) + 2*d + 3*kappa"),
        rel("flexes: rho = 3n(n-2) - 6d - 8kappa", "rho - 3*n*(n-2) + 6*d + 8*kappa"),
        rel("dual class: n = nu(nu-1) - 2delta - 3rho", "n - nu*(nu-1) + 2*delta + 3*rho"),
        rel("dual flexes: kappa = 3nu(nu-2) - 6delta - 8rho", "kappa - 3*nu*(nu-2) + 6*delta + 8*rho"),
        rel("3nu - rho = 3n - kappa", "3*nu - rho - 3*n + kappa"),
        rel("dual genus: p = (nu-1)(nu-2)/2 - delta - rho", "2*p - (nu-1)*(nu-2) + 2*delta + 2*rho"),
    };
  }();
  return rels;
}

namespace {

std::vector<std::optional<Int>> as_values(const PluckerChars& c) {
  auto f = [](const std::optional<long>& x) -> std::optional<Int> {
    if (!x) return std::nullopt;
    return Int(*x);
  };
  return {f(c.n), f(c.nu), f(c.d), f(c.kappa), f(c.delta), f(c.rho), f(c.p)};
}

}  // namespace

PluckerChars plucker_solve(const PluckerChars& partial) {
  const auto v = solve_characters(plucker_vars(), plucker_relations(), as_values(partial));
  PluckerChars c;
  c.n = v[0].get_si();
  c.nu = v[1].get_si();
  c.d = v[2].get_si();
  c.kappa = v[3].get_si();
  c.delta = v[4].get_si();
  c.rho = v[5].get_si();
  c.p = v[6].get_si();
  return c;
}

std::vector<std::string> plucker_violations(const PluckerChars& c) {
  std::vector<std::string> out;
  if (!c.complete()) return {"incomplete"};
  std::vector<Rat> vals;
  for (const auto& x : as_values(c)) vals.emplace_back(*x);
  for (const auto& r : plucker_relations())
    if (!r.expr.eval(vals).is_zero()) out.push_back(r.name);
  return out;
}

PluckerChars dual_chars(const PluckerChars& c) {
  PluckerChars d = c;
  d.n = c.nu;
  d.nu = c.n;
  d.d = c.delta;
  d.delta = c.d;
  d.kappa = c.rho;
  d.rho = c.kappa;
  return d;
}

TernaryForm first_polar(const TernaryForm& f, const ProjPoint& p) {
  const auto pt = p.rat();
  MultiPoly r(f.poly().vars());
  for (int i = 0; i < 3; ++i) r += f.partial(i) * pt[i];
  if (r.is_zero()) throw CurveError(ErrorKind::ZeroPolar, "first polar of " + p.str() + " vanishes identically");
  return TernaryForm(r);
}

NodeCuspCount node_cusp_count(const TernaryForm& f, Rng& rng) {
  NodeCuspCount c;
  for (const auto& s : classify_singularities(f, rng, 0)) {
    if (!s.is_simple())
      throw CurveError(ErrorKind::UnsupportedSingularity,
                       "singular point of multiplicity " + std::to_string(s.multiplicity) + " (" + to_string(s.kind) +
                           (s.point ? " at " + s.point->str() : std::string()) + ") is not a node or simple cusp");
    (s.kind == SingularKind::Node ? c.nodes : c.cusps) += s.count();
  }
  return c;
}

PluckerChars curve_characters(const TernaryForm& f, Rng& rng) {
  const NodeCuspCount c = node_cusp_count(f, rng);
  PluckerChars in;
  in.n = f.degree();
  in.d = c.nodes;
  in.kappa = c.cusps;
  return plucker_solve(in);
}

long curve_class(const TernaryForm& f, Rng& rng) { return *curve_characters(f, rng).nu; }
long flex_count(const TernaryForm& f, Rng& rng) { return *curve_characters(f, rng).rho; }

Hessian hessian(const TernaryForm& f) {
  Hessian h;
  h.poly = hessian_determinant(f.poly());
  if (!h.poly.vars()) h.poly = h.poly.with_vars(f.poly().vars());
  h.constant = f.degree() <= 2;
  return h;
}

namespace {

struct FlexData {
  bool singular = false;
  int singular_base = 0;
  int contact = 0;
};

FlexData flex_data(const ResidueRing& k, const MultiPoly& f, const std::vector<QPoly>& p, int hessian_mult) {
  FlexData out;
  std::vector<QPoly> g;
  bool all_zero = true;
  for (int i = 0; i < 3; ++i) {
    g.push_back(eval_at(k, f.partial(i), p));
    all_zero = all_zero && k.is_zero(g.back());
  }
  if (all_zero) {
    out.singular = true;
    const LocalData d = local_data(k, f, p);
    out.singular_base = d.profile.size() == 2 ? 6 : 8;
    return out;
  }
  // A simple meeting with the Hessian at a smooth point is an ordinary flex.
  if (hessian_mult == 1) {
    out.contact = 3;
    return out;
  }
  int piv = 2;
  while (k.is_zero(p[piv])) --piv;
  // Direction of the tangent line: gradient x e_piv.
  std::vector<QPoly> e(3, QPoly());
  e[piv] = QPoly(Rat(1));
  std::vector<QPoly> dir{k.reduce(g[1] * e[2] - g[2] * e[1]), k.reduce(g[2] * e[0] - g[0] * e[2]),
                         k.reduce(g[0] * e[1] - g[1] * e[0])};
  out.contact = line_contact(k, f, p, dir);
  return out;
}

Complex eval_complex(const MultiPoly& f, const std::array<Complex, 3>& p) {
  Complex acc;
  for (const auto& [e, c] : f.terms()) {
    Complex t(c);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < e[i]; ++j) t = t * p[i];
    acc += t;
  }
  return acc;
}

std::array<Complex, 3> cross(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::array<Complex, 3> normalize(std::array<Complex, 3> v) {
  int big = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(v[i]) > abs(v[big])) big = i;
  const Complex d = v[big];
  for (auto& x : v) x = x / d;
  return v;
}

Complex dot(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

std::vector<Flex> flexes(const TernaryForm& f, Rng& rng, unsigned bits) {
  if (f.degree() <= 2) return {};
  node_cusp_count(f, rng);
  const Hessian h = hessian(f);
  if (h.poly.is_zero()) throw CurveError(ErrorKind::UnsupportedSingularity, "Hessian vanishes identically");
  std::vector<Flex> out;
  for (const auto& r : intersect(f, TernaryForm(h.poly), rng, 0)) {
    auto pieces = split_apply<FlexData>(r.block.minpoly, [&](const ResidueRing& k) {
      return flex_data(k, f.poly(), r.block.coord_vector(), r.local_multiplicity);
    });
    for (const auto& [piece, d] : pieces) {
      Flex fl;
      fl.block = r.block.restrict_to(piece);
      fl.at_singular_point = d.singular;
      fl.weight = d.singular ? r.local_multiplicity - d.singular_base : r.local_multiplicity;
      fl.contact = d.contact;
      if (fl.weight <= 0) continue;
      if (fl.block.is_rational())
        fl.point = fl.block.point();
      else if (bits > 0)
        fl.numeric = numeric_points(fl.block, bits);
      out.push_back(std::move(fl));
    }
  }
  return out;
}

int flex_total(const std::vector<Flex>& fl) {
  int s = 0;
  for (const auto& x : fl) s += x.weight * x.count();
  return s;
}

namespace {

BiPoly reduce_monic(BiPoly a, const BiPoly& f) {
  const int n = f.degree();
  while (a.degree() >= n) {
    const int k = a.degree() - n;
    const QPoly c = a.lc();
    a -= c * f.shift(k);
  }
  return a;
}

}  // namespace

std::vector<MultiPoly> implicitize(const MultiPoly& f, const std::vector<MultiPoly>& images, int e, Rng& rng,
                                   const VarList& target) {
  const int n = f.total_degree();
  RatMatrix a = identity3();
  Exponent top{};
  top[1] = static_cast<std::uint16_t>(n);
  for (int attempt = 0; linear_substitute(f, a).coeff(top).is_zero(); ++attempt) {
    if (attempt > 64) throw CurveError(ErrorKind::EliminationDegenerate, "no frame makes the curve monic");
    a = random_invertible(rng, 3, 3);
  }
  const MultiPoly fa = linear_substitute(f, a);
  BiPoly bf = to_bipoly(fa);
  bf = QPoly(Rat(1) / fa.coeff(top)) * bf;
  std::vector<std::vector<BiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const BiPoly g = reduce_monic(to_bipoly(linear_substitute(images[i], a)), bf);
    powers[i].push_back(BiPoly(QPoly(Rat(1))));
    for (int k = 1; k <= e; ++k) powers[i].push_back(reduce_monic(powers[i].back() * g, bf));
  }
  const auto monos = monomials_of_degree(images.size(), e);
  std::vector<BiPoly> values;
  std::map<std::pair<int, int>, int> row_of;
  for (const auto& m : monos) {
    BiPoly v(QPoly(Rat(1)));
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m[i]) v = reduce_monic(v * powers[i][m[i]], bf);
    for (int j = 0; j <= v.degree(); ++j)
      for (int i = 0; i <= v.coeffs()[j].degree(); ++i)
        if (!v.coeffs()[j].coeffs()[i].is_zero()) row_of.emplace(std::make_pair(j, i), static_cast<int>(row_of.size()));
    values.push_back(std::move(v));
  }
  RatMatrix m(static_cast<int>(row_of.size()), static_cast<int>(monos.size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = Rat(0);
  for (std::size_t c = 0; c < values.size(); ++c) {
    const BiPoly& v = values[c];
    for (int j = 0; j <= v.degree(); ++j)
      for (int i = 0; i <= v.coeffs()[j].degree(); ++i)
        if (!v.coeffs()[j].coeffs()[i].is_zero()) m(row_of.at({j, i}), static_cast<int>(c)) = v.coeffs()[j].coeffs()[i];
  }
  const RatMatrix ker = m.rows() == 0 ? RatMatrix(RatMatrix::Identity(m.cols(), m.cols())) : nullspace(m);
  std::vector<MultiPoly> out;
  for (int k = 0; k < ker.cols(); ++k) {
    MultiPoly d(target);
    for (std::size_t c = 0; c < monos.size(); ++c) d.add_term(monos[c], ker(static_cast<int>(c), k));
    out.push_back(primitive_integer(d));
  }
  return out;
}

TernaryForm dual_curve(const TernaryForm& f, Rng& rng) {
  if (f.degree() < 2) throw CurveError(ErrorKind::DomainError, "dual curve needs degree at least 2");
  const long nu = curve_class(f, rng);
  const std::vector<MultiPoly> grad{f.partial(0), f.partial(1), f.partial(2)};
  const auto ker = implicitize(f.poly(), grad, static_cast<int>(nu), rng, uvw_vars());
  if (ker.size() != 1)
    throw CurveError(ErrorKind::EliminationDegenerate, "elimination produced " + std::to_string(ker.size()) +
                                                           " independent forms of the expected degree " + std::to_string(nu));
  return TernaryForm(ker[0]);
}

CubicFlexPencil cubic_flex_pencil(const TernaryForm& f, Rng& rng, unsigned bits) {
  if (f.degree() != 3) throw CurveError(ErrorKind::NotSmoothCubic, "input is not a cubic");
  try {
    if (curve_is_singular(f, rng).singular) throw CurveError(ErrorKind::NotSmoothCubic, "cubic is singular");
  } catch (const CurveError& e) {
    if (e.kind() == ErrorKind::NotACurve) throw CurveError(ErrorKind::NotSmoothCubic, e.what());
    throw;
  }
  CubicFlexPencil out;
  const MultiPoly h = hessian(f).poly;
  const PencilDiscriminant pd = pencil_singular_members(f, TernaryForm(h), rng, 0);
  out.discriminant = pd.delta;
  out.discriminant_degree = pd.expected_degree;
  // Cube root of the discriminant, as a binary form of degree 4.
  const int inf = pd.roots.infinity_multiplicity;
  QPoly q(Rat(1));
  for (const auto& [factor, m] : squarefree_decomposition(pd.delta)) {
    if (m % 3) throw CurveError(ErrorKind::HypothesisFailed, "pencil discriminant is not a perfect cube");
    q = q * pow(factor, m / 3);
  }
  if (inf % 3) throw CurveError(ErrorKind::HypothesisFailed, "pencil discriminant is not a perfect cube at infinity");
  q = primitive_integer(q);
  const Rat c = pd.delta.lc() / pow(q.lc(), 3);
  if (!(c * pow(q, 3) == pd.delta)) throw CurveError(ErrorKind::HypothesisFailed, "cube identity failed");
  const VarList lm = make_vars({"lambda", "mu"});
  out.quartic = MultiPoly(lm);
  for (int i = 0; i <= q.degree(); ++i) {
    Exponent e{};
    e[0] = static_cast<std::uint16_t>(i);
    e[1] = static_cast<std::uint16_t>(4 - i);
    out.quartic.add_term(e, q.coeffs()[i]);
  }
  out.quartic_roots = locate_roots(q, bits);
  out.quartic_roots.infinity_multiplicity = 4 - q.degree();

  PrecisionGuard guard(bits + 64);
  // Parameter values of the four triangles.
  struct Param {
    std::optional<Rat> exact;
    Complex approx;
    bool infinity = false;
  };
  std::vector<Param> params;
  for (const auto& [r, m] : out.quartic_roots.rational) params.push_back({r, Complex(r), false});
  for (const auto& z : out.quartic_roots.numeric) params.push_back({std::nullopt, z.z, false});
  if (out.quartic_roots.infinity_multiplicity > 0) params.push_back({std::nullopt, Complex(), true});
  for (const auto& p : params) {
    if (p.infinity)
      out.triangles.emplace_back(TernaryForm(h));
    else if (p.exact)
      out.triangles.emplace_back(TernaryForm(f.poly() + h * *p.exact));
    else
      out.triangles.emplace_back(std::nullopt);
  }

  for (const auto& r : intersect(f, TernaryForm(h), rng, 0)) {
    if (r.local_multiplicity != 1) throw CurveError(ErrorKind::HypothesisFailed, "flex with multiplicity above one");
    if (r.block.is_rational()) {
      const auto pt = r.block.point().rat();
      out.flex_points.push_back(normalize({Complex(pt[0]), Complex(pt[1]), Complex(pt[2])}));
      out.exact_flexes.push_back(r.block.point());
    } else {
      for (const auto& np : numeric_points(r.block, bits)) {
        out.flex_points.push_back(np.coords);
        out.exact_flexes.push_back(std::nullopt);
      }
    }
  }
  const int nf = static_cast<int>(out.flex_points.size());
  out.max_incidence_error = Real(0);
  const Real tol = two_pow(-static_cast<int>(bits) / 2);
  std::set<std::array<int, 3>> triples;
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j) {
      const auto l = normalize(cross(out.flex_points[i], out.flex_points[j]));
      int best = -1;
      Real best_err(1);
      for (int k = 0; k < nf; ++k) {
        if (k == i || k == j) continue;
        const Real err = abs(dot(l, out.flex_points[k]));
        if (best < 0 || err < best_err) {
          best = k;
          best_err = err;
        }
      }
      if (best_err > tol) continue;
      std::array<int, 3> t{i, j, best};
      std::sort(t.begin(), t.end());
      if (!triples.insert(t).second) continue;
      if (best_err > out.max_incidence_error) out.max_incidence_error = best_err;
      FlexLine line;
      line.coeffs = l;
      line.flexes = t;
      // Exact equation when two of its flexes are rational.
      std::vector<ProjPoint> rat;
      for (int q : t)
        if (out.exact_flexes[q]) rat.push_back(*out.exact_flexes[q]);
      if (rat.size() >= 2) {
        const auto a = rat[0].rat(), b = rat[1].rat();
        MultiPoly eq(xyz_vars());
        const std::array<Rat, 3> cr{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        for (int q = 0; q < 3; ++q) eq += MultiPoly::variable(xyz_vars(), q) * cr[q];
        bool on = true;
        for (const auto& p : rat) {
          const auto pr = p.rat();
          on = on && eq.eval({pr[0], pr[1], pr[2]}).is_zero();
        }
        if (on) line.exact = TernaryForm(primitive_integer(eq));
      }
      // Triangle: the member of the pencil vanishing at a further point of the line.
      std::array<Complex, 3> q;
      for (int s = 0; s < 3; ++s) q[s] = out.flex_points[t[0]][s] + Complex(Real(2), Real(0.5)) * out.flex_points[t[1]][s];
      const Complex fq = eval_complex(f.poly(), q), hq = eval_complex(h, q);
      Real best_rel(-1);
      for (std::size_t pi = 0; pi < params.size(); ++pi) {
        Real rel;
        if (params[pi].infinity) {
          rel = abs(hq) / (abs(fq) + abs(hq));
        } else {
          rel = abs(fq + params[pi].approx * hq) / (abs(fq) + abs(params[pi].approx) * abs(hq));
        }
        if (best_rel < 0 || rel < best_rel) {
          best_rel = rel;
          line.triangle = static_cast<int>(pi);
        }
      }
      if (best_rel > tol) line.triangle = -1;
      if (line.exact && line.triangle >= 0 && out.triangles[line.triangle]) {
        if (!try_divide(out.triangles[line.triangle]->poly(), line.exact->poly()))
          throw CurveError(ErrorKind::HypothesisFailed, "rational flex line does not divide its triangle");
      }
      out.lines.push_back(std::move(line));
    }
  std::vector<int> per_flex(nf, 0);
  for (const auto& l : out.lines)
    for (int q : l.flexes) ++per_flex[q];
  out.each_flex_on_four_lines = nf == 9 && std::all_of(per_flex.begin(), per_flex.end(), [](int x) { return x == 4; });
  return out;
}

}  // namespace curvekit
