#include "curvekit/space.hpp"

#include "curvekit/elim.hpp"
#include "curvekit/errors.hpp"

namespace curvekit {

VarList cayley_vars() {
  static const VarList v = make_vars({"n", "r", "nu", "d", "delta", "t", "tau", "K", "chi", "p"});
  return v;
}

const std::vector<CharacterRelation>& cayley_relations() {
  static const std::vector<CharacterRelation> rels = [] {
    const VarList v = cayley_vars();
    auto rel = [&](const char* name, const char* expr) { return CharacterRelation{name, parse(expr, v)}; };
    return std::vector<CharacterRelation>{
        rel("genus: p = (n-1)(n-2)/2 - d - K", "2*p - (n-1)*(n-2) + 2*d + 2*K"),
        rel("rank: r = n(n-1) - 2d - 3K", "r - n*(n-1) + 2*d + 3*K"),
        rel("class: nu = 3n(n-2) - 6d - 8K", "nu - 3*n*(n-2) + 6*d + 8*K"),
        rel("3r - nu = 3n - K", "3*r - nu - 3*n + K"),
        rel("order from rank: n = r(r-1) - 2t - 3nu", "n - r*(r-1) + 2*t + 3*nu"),
        rel("class from rank: nu = r(r-1) - 2tau - 3n", "nu - r*(r-1) + 2*tau + 3*n"),
        rel("chi = 3nu - 3r + n", "chi - 3*nu + 3*r - n"),
        rel("dual genus: p = (nu-1)(nu-2)/2 - delta - chi", "2*p - (nu-1)*(nu-2) + 2*delta + 2*chi"),
        rel("rank from class: r = nu(nu-1) - 2delta - 3chi", "r - nu*(nu-1) + 2*delta + 3*chi"),
        rel("order from class: n = 3nu(nu-2) - 6delta - 8chi", "n - 3*nu*(nu-2) + 6*delta + 8*chi"),
    };
  }();
  return rels;
}

namespace {

std::vector<std::optional<Int>> as_values(const CayleyChars& c) {
  auto f = [](const std::optional<long>& x) -> std::optional<Int> {
    if (!x) return std::nullopt;
    return Int(*x);
  };
  return {f(c.n), f(c.r), f(c.nu), f(c.d), f(c.delta), f(c.t), f(c.tau), f(c.K), f(c.chi), f(c.p)};
}

}  // namespace

CayleyChars cayley_complete(const CayleyChars& known) {
  CayleyChars in = known;
  if (!in.K) in.K = 0;
  const auto v = solve_characters(cayley_vars(), cayley_relations(), as_values(in));
  CayleyChars c;
  c.n = v[0].get_si();
  c.r = v[1].get_si();
  c.nu = v[2].get_si();
  c.d = v[3].get_si();
  c.delta = v[4].get_si();
  c.t = v[5].get_si();
  c.tau = v[6].get_si();
  c.K = v[7].get_si();
  c.chi = v[8].get_si();
  c.p = v[9].get_si();
  return c;
}

std::vector<std::string> cayley_violations(const CayleyChars& c) {
  if (!c.complete()) return {"incomplete"};
  std::vector<Rat> vals;
  for (const auto& x : as_values(c)) vals.emplace_back(*x);
  std::vector<std::string> out;
  for (const auto& r : cayley_relations())
    if (!r.expr.eval(vals).is_zero()) out.push_back(r.name);
  return out;
}

long ci_genus(long mu, long nu) { return mu * nu * (mu + nu - 4) / 2 + 1; }

CayleyChars ci_characters(long mu, long nu) {
  if (mu < 1 || nu < 1) throw CurveError(ErrorKind::PreconditionViolated, "surface degrees must be positive");
  CayleyChars c;
  c.n = mu * nu;
  c.p = ci_genus(mu, nu);
  c.d = mu * nu * (mu - 1) * (nu - 1) / 2;
  c.K = 0;
  if (mu == 1 || nu == 1) {
    // plane curve: the osculating-plane characters are not defined
    c.r = mu * nu * (mu + nu - 2);
    return c;
  }
  const CayleyChars full = cayley_complete(c);
  if (*full.r != mu * nu * (mu + nu - 2))
    throw CurveError(ErrorKind::Inconsistent, "rank disagrees with the complete intersection value");
  return full;
}

LinkageResult linked_characters(const LinkageInput& in) {
  const long s = in.mu + in.nu - 4;
  LinkageResult out;
  out.n2 = in.mu * in.nu - in.n1;
  if (in.n1 < 1 || out.n2 < 1)
    throw CurveError(ErrorKind::InconsistentLinkage, "both curves must have positive order; n2 = " + std::to_string(out.n2));
  if (in.p1) {
    const long i = in.n1 * s - 2 * *in.p1 + 2;
    if (in.i && *in.i != i)
      throw CurveError(ErrorKind::InconsistentLinkage,
                       "contact count " + std::to_string(*in.i) + " disagrees with the genus, which forces " + std::to_string(i));
    out.i = i;
    out.p1 = *in.p1;
  } else if (in.i) {
    out.i = *in.i;
    const long twice = in.n1 * s - out.i + 2;
    if (twice % 2 != 0) throw CurveError(ErrorKind::InconsistentLinkage, "genus of the first curve is not an integer");
    out.p1 = twice / 2;
  } else {
    throw CurveError(ErrorKind::Underdetermined, "either p1 or i is required");
  }
  if (out.i < 1) throw CurveError(ErrorKind::InconsistentLinkage, "contact count must be positive, got " + std::to_string(out.i));
  if (out.p1 < 0) throw CurveError(ErrorKind::InconsistentLinkage, "negative genus for the first curve");
  const long twice = out.n2 * s - out.i + 2;
  if (twice % 2 != 0) throw CurveError(ErrorKind::InconsistentLinkage, "genus of the residual curve is not an integer");
  out.p2 = twice / 2;
  if (out.p2 < 0) throw CurveError(ErrorKind::InconsistentLinkage, "negative genus for the residual curve");
  out.p_total = out.p1 + out.p2 + out.i - 1;
  if (out.p_total != ci_genus(in.mu, in.nu))
    throw CurveError(ErrorKind::InconsistentLinkage, "genus is not conserved");
  return out;
}

SpaceProjection project_ci(const QuaternaryForm& f, const QuaternaryForm& g, const SpacePoint& c) {
  int k = -1;
  for (int i = 0; i < 4; ++i)
    if (!c[i].is_zero()) k = i;
  if (k < 0) throw CurveError(ErrorKind::PreconditionViolated, "center must be a nonzero vector");
  RatMatrix m = RatMatrix::Zero(4, 4);
  for (int i = 0, col = 0; i < 4; ++i)
    if (i != k) m(i, col++) = Rat(1);
  for (int i = 0; i < 4; ++i) m(i, 3) = c[i];
  const MultiPoly ft = linear_substitute(f.poly(), m), gt = linear_substitute(g.poly(), m);
  const std::vector<Rat> cv(c.begin(), c.end());
  const bool on_f = f.poly().eval(cv).is_zero(), on_g = g.poly().eval(cv).is_zero();
  if (ft.degree_in(3) == 0 || gt.degree_in(3) == 0)
    throw CurveError(ErrorKind::CenterDegenerate, "a surface is a cone with vertex at the center");
  const MultiPoly r = resultant(ft, gt, 3);
  if (r.is_zero()) throw CurveError(ErrorKind::CenterDegenerate, "the surfaces share a component through the center");
  MultiPoly plane(xyz_vars());
  for (const auto& [e, v] : r.terms()) {
    Exponent e3{};
    for (int i = 0; i < 3; ++i) e3[i] = e[i];
    plane.add_term(e3, v);
  }
  const TernaryForm curve(primitive_integer(plane));
  const int n = f.degree() * g.degree();
  const bool on_curve = on_f && on_g;
  const int expected = on_curve ? n - 1 : n;
  if (curve.degree() != expected)
    throw CurveError(ErrorKind::CenterDegenerate, "projection has degree " + std::to_string(curve.degree()) + ", expected " +
                                                      std::to_string(expected));
  Rng rng;
  if (repeated_factor(curve.poly(), rng))
    throw CurveError(ErrorKind::CenterDegenerate, "projection from this center is not birational onto its image");
  return {curve, on_curve, m};
}

Postulation postulation(long n, long p, long m) {
  Postulation out;
  out.value = m * n - p + 1;
  out.below_threshold = m < n - 2;
  out.meets_sharper_bound = 2 * m >= n - 3;
  return out;
}

long postulation_rank(const std::vector<BinaryForm>& param, int m) {
  if (param.size() != 4) throw CurveError(ErrorKind::DegenerateParametrization, "four binary forms are required");
  const int d = param[0].degree();
  QPoly g;
  bool all_vanish_at_infinity = true;
  for (const auto& f : param) {
    if (f.degree() != d) throw CurveError(ErrorKind::DegenerateParametrization, "forms differ in degree");
    if (f.poly().is_zero()) continue;
    g = gcd(g, f.dehomogenize());
    if (!f.coeff(d).is_zero()) all_vanish_at_infinity = false;
  }
  if (is_zero(g)) throw CurveError(ErrorKind::DegenerateParametrization, "all forms vanish");
  if (g.degree() > 0 || all_vanish_at_infinity)
    throw CurveError(ErrorKind::DegenerateParametrization, "forms share a common factor");
  std::vector<MultiPoly> images;
  for (const auto& f : param) images.push_back(f.poly().with_vars(st_vars()));
  const auto target = monomials_of_degree(2, m * d);
  std::vector<std::vector<Rat>> cols;
  for (const auto& e : monomials_of_degree(4, m)) {
    MultiPoly v(st_vars(), Rat(1));
    for (int i = 0; i < 4; ++i) v *= pow(images[i], e[i]);
    std::vector<Rat> col;
    for (const auto& t : target) col.push_back(v.coeff(t));
    cols.push_back(std::move(col));
  }
  return rank(from_rows(cols, static_cast<int>(target.size())));
}

long castelnuovo_bound(long n) {
  if (n < 3) throw CurveError(ErrorKind::PreconditionViolated, "order must be at least 3");
  const long chi = n % 2 == 0 ? (n - 2) / 2 : (n - 3) / 2;
  return chi * (n - chi - 2);
}

long quadric_bidegree_genus(long n, long mu) {
  if (mu < 1 || mu > n - 1) throw CurveError(ErrorKind::PreconditionViolated, "need 1 <= mu <= n - 1");
  return (mu - 1) * (n - mu - 1);
}

long moduli_count(long n, long p) {
  if (!(n - 3 >= p || p == 0 || p == 1))
    throw CurveError(ErrorKind::OutOfRegime, "the count needs n - 3 >= p or p <= 1");
  return 4 * n;
}

}  // namespace curvekit
