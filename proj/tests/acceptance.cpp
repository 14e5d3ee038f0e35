// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "curvekit/cremona.hpp"
#include "curvekit/elim.hpp"
#include "curvekit/errors.hpp"
#include "curvekit/linsys.hpp"
#include "curvekit/local.hpp"
#include "curvekit/plucker.hpp"
#include "curvekit/series.hpp"
#include "curvekit/space.hpp"

using namespace curvekit;

namespace {

constexpr double kIncidenceTolerance = 1e-30;
constexpr int kBezoutPairs = 200;
constexpr int kPencilCubics = 20;
constexpr int kNoetherTriples = 50;

TernaryForm tf(const char* s) { return TernaryForm::parse(s); }
ProjPoint pt(long a, long b, long c) { return ProjPoint(Rat(a), Rat(b), Rat(c)); }
long coeff_count(long k) { return k >= 0 ? (k + 1) * (k + 2) / 2 : 0; }

MultiPoly random_form(Rng& rng, int d, long bound) {
  MultiPoly p(xyz_vars());
  for (const auto& e : monomials_of_degree(3, d)) p.add_term(e, rng.integer(bound));
  if (p.is_zero()) p.add_term(monomials_of_degree(3, d)[0], Rat(1));
  return p;
}

// Collects failure descriptions; an empty list means the criterion passed.
struct Result {
  std::vector<std::string> failures;
  std::string summary;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Result bezout() {
  Result r;
  Rng rng(kDefaultSeed);
  int pairs = 0;
  while (pairs < kBezoutPairs) {
    const int m = static_cast<int>(rng.uniform(1, 4)), n = static_cast<int>(rng.uniform(1, 4));
    const TernaryForm f(random_form(rng, m, 5)), g(random_form(rng, n, 5));
    std::vector<IntersectionRecord> recs;
    try {
      recs = intersect(f, g, rng, 0);
    } catch (const CurveError& e) {
      if (e.kind() == ErrorKind::CommonComponent) continue;
      throw;
    }
    ++pairs;
    r.require(bezout_total(recs) == m * n, f.str() + " and " + g.str());
  }
  r.summary = std::to_string(pairs) + " coprime pairs";
  return r;
}

Result cubic_table() {
  Result r;
  const long in[3][2] = {{0, 0}, {1, 0}, {0, 1}};
  const long expect[3][2] = {{6, 9}, {4, 3}, {3, 1}};
  for (int i = 0; i < 3; ++i) {
    PluckerChars c;
    c.n = 3;
    c.d = in[i][0];
    c.kappa = in[i][1];
    const auto s = plucker_solve(c);
    r.require(*s.nu == expect[i][0] && *s.rho == expect[i][1], "row " + std::to_string(i));
  }
  PluckerChars bad;
  bad.n = 3;
  bad.d = 2;
  bad.kappa = 0;
  try {
    plucker_solve(bad);
    r.require(false, "(3,2,0) accepted");
  } catch (const CurveError& e) {
    r.require(e.kind() == ErrorKind::Inconsistent, "(3,2,0) raised " + std::string(to_string(e.kind())));
  }
  return r;
}

Result fermat_flexes() {
  Result r;
  Rng rng(kDefaultSeed);
  const auto f = tf("x^3 + y^3 + z^3");
  const auto fl = flexes(f, rng, 0);
  r.require(flex_total(fl) == 9, "flex total");
  std::vector<ProjPoint> rational;
  for (const auto& x : fl)
    if (x.point) rational.push_back(*x.point);
  std::sort(rational.begin(), rational.end());
  r.require(rational == std::vector<ProjPoint>{pt(0, 1, -1), pt(1, -1, 0), pt(1, 0, -1)}, "rational flexes");

  const auto c = cubic_flex_pencil(f, rng);
  r.require(c.lines.size() == 12, "twelve lines");
  r.require(c.each_flex_on_four_lines, "four lines through each flex");
  r.require(c.max_incidence_error < kIncidenceTolerance, "numeric incidence " + format_real(c.max_incidence_error, 3));
  std::vector<int> through(9, 0);
  for (const auto& l : c.lines)
    for (int i : l.flexes) ++through[i];
  r.require(std::all_of(through.begin(), through.end(), [](int k) { return k == 4; }), "incidence count");
  int exact_checks = 0;
  for (const auto& l : c.lines) {
    if (!l.exact) continue;
    for (int i : l.flexes) {
      if (!c.exact_flexes[i]) continue;
      ++exact_checks;
      r.require(l.exact->eval(c.exact_flexes[i]->rat()).is_zero(), "exact incidence on " + l.exact->str());
    }
  }
  r.summary = std::to_string(exact_checks) + " exact incidences, numeric error " + format_real(c.max_incidence_error, 3);
  return r;
}

Result flex_pencil() {
  Result r;
  Rng rng(kDefaultSeed);
  int cubics = 0;
  while (cubics < kPencilCubics) {
    const TernaryForm f(random_form(rng, 3, 3));
    if (curve_is_singular(f, rng).singular) continue;
    ++cubics;
    const auto h = hessian(f).poly;
    const auto pd = pencil_singular_members(f, TernaryForm(h), rng, 0);
    r.require(pd.delta.degree() + pd.roots.infinity_multiplicity == 12, "degree for " + f.str());
    const auto c = cubic_flex_pencil(f, rng, 128);
    QPoly q;
    for (const auto& [e, coef] : c.quartic.terms()) {
      std::vector<Rat> co(e[0] + 1);
      co[e[0]] = coef;
      q = q + QPoly(co);
    }
    const QPoly cube = pow(q, 3);
    const Rat scale = pd.delta.lc() / cube.lc();
    r.require(scale * cube == pd.delta, "cube identity for " + f.str());
    r.require(pd.roots.infinity_multiplicity == 3 * (4 - q.degree()), "cube at infinity for " + f.str());
  }
  return r;
}

Result plucker_closure() {
  Result r;
  int sets = 0;
  for (long n = 2; n <= 9; ++n)
    for (long d = 0; d <= 6; ++d)
      for (long k = 0; k <= 3; ++k) {
        PluckerChars in;
        in.n = n;
        in.d = d;
        in.kappa = k;
        PluckerChars c;
        try {
          c = plucker_solve(in);
        } catch (const CurveError&) {
          continue;
        }
        ++sets;
        const long nu = *c.nu, rho = *c.rho, delta = *c.delta;
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(k) + ")";
        r.require(3 * nu - rho == 3 * n - k, tag + " 3nu - rho");
        r.require(nu == n * (n - 1) - 2 * d - 3 * k, tag + " class");
        r.require(rho == 3 * n * (n - 2) - 6 * d - 8 * k, tag + " flexes");
        r.require(n == nu * (nu - 1) - 2 * delta - 3 * rho, tag + " dual class");
        r.require(k == 3 * nu * (nu - 2) - 6 * delta - 8 * rho, tag + " dual flexes");
      }
  PluckerChars q;
  q.n = 4;
  q.d = 0;
  q.kappa = 0;
  r.require(*plucker_solve(q).delta == 28, "smooth quartic bitangents");
  r.summary = std::to_string(sets) + " completed sets";
  return r;
}

Result noether() {
  Result r;
  Rng rng(kDefaultSeed);
  int triples = 0;
  while (triples < kNoetherTriples) {
    const int p = static_cast<int>(rng.uniform(1, 3)), q = static_cast<int>(rng.uniform(1, 3));
    const int n = static_cast<int>(rng.uniform(std::max(p, q), 6));
    const TernaryForm phi(random_form(rng, p, 5)), psi(random_form(rng, q, 5));
    if (ternary_gcd(phi.poly(), psi.poly(), rng).total_degree() > 0) continue;
    const MultiPoly f = random_form(rng, n - p, 5) * phi.poly() + random_form(rng, n - q, 5) * psi.poly();
    if (f.is_zero() || f.total_degree() != n) continue;
    ++triples;
    const auto dec = noether_decompose(TernaryForm(f), phi, psi, rng);
    r.require(noether_expand(dec, phi, psi) == f, "expansion for " + f.str());
    r.require(dec.residual_freedom == coeff_count(n - p - q), "ambiguity for degrees " + std::to_string(n) + "," +
                                                                  std::to_string(p) + "," + std::to_string(q));
  }
  return r;
}

Result cremona() {
  Result r;
  Rng rng(kDefaultSeed);
  int steps = 0;
  for (const char* src : {"y^2*z - x^3", "y^2*z^2 - x^4 - y^4"}) {
    const auto f = tf(src);
    const auto res = resolve(f, rng);
    const long p0 = genus(f, rng).p;
    for (const auto& s : res.steps) {
      ++steps;
      const int n = s.before.degree();
      std::array<int, 3> a{};
      for (int i = 0; i < 3; ++i) a[i] = multiplicity_at(s.before, s.frame.triangle[i]);
      r.require(s.after.degree() == 2 * n - a[0] - a[1] - a[2], std::string(src) + ": degree law");
      const std::array<ProjPoint, 3> std_vertices{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)};
      for (int i = 0; i < 3; ++i)
        r.require(multiplicity_at(s.after, std_vertices[i]) == n - a[(i + 1) % 3] - a[(i + 2) % 3],
                  std::string(src) + ": vertex multiplicity");
      r.require(s.law_holds, std::string(src) + ": reported law");
      r.require(genus(s.after, rng).p == p0, std::string(src) + ": genus changed");
    }
    for (const auto& s : classify_singularities(res.final_curve, rng, 0))
      r.require(is_ordinary(s), std::string(src) + ": final curve not ordinary");
  }
  r.summary = std::to_string(steps) + " steps";
  return r;
}

Result homaloidal() {
  Result r;
  const std::vector<std::pair<int, std::vector<int>>> types{{1, {}}, {2, {1, 1, 1}}, {3, {2, 1, 1, 1, 1}}};
  int mutations = 0;
  for (const auto& [n, m] : types) {
    r.require(homaloidal_check(n, m), "type of degree " + std::to_string(n));
    for (int dn : {-1, 1}) {
      ++mutations;
      r.require(!homaloidal_check(n + dn, m), "degree mutation of " + std::to_string(n));
    }
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int dm : {-1, 1}) {
        auto mm = m;
        mm[i] += dm;
        ++mutations;
        r.require(!homaloidal_check(n, mm), "multiplicity mutation of " + std::to_string(n));
      }
    auto extra = m;
    extra.push_back(1);
    ++mutations;
    r.require(!homaloidal_check(n, extra), "extra point for " + std::to_string(n));
  }
  r.summary = std::to_string(mutations) + " mutations rejected";
  return r;
}

Result canonical() {
  Result r;
  Rng rng(kDefaultSeed);
  struct Case {
    const char* curve;
    long order, dim;
  };
  for (const Case& c : {Case{"x^4 + x^3*z + x^2*z^2 + y^4 - 2*y^2*z^2", 2, 1}, Case{"x^4 + y^4 + z^4", 4, 2},
                        Case{"x^5 + y^5 + z^5", 10, 5}}) {
    const auto f = tf(c.curve);
    const auto cs = canonical_series(f, rng);
    r.require(cs.series.order == c.order && cs.series.dimension == c.dim, std::string(c.curve) + ": canonical");
    const long p = cs.p;
    for (int i = 3; i <= 4; ++i) {
      const auto s = cut_series(f, adjoint_system(f, f.degree() - 3 + i, rng), rng);
      const auto [ni, ri] = series_formulas(f.degree(), p, i);
      r.require(s.order == ni && s.dimension == ri && s.order - s.dimension == p,
                std::string(c.curve) + ": i=" + std::to_string(i));
    }
  }
  return r;
}

// Rank of the conditions that lines through the given points (rows) must satisfy.
long line_rank(const std::vector<std::array<Rat, 3>>& rows) {
  if (rows.empty()) return 0;
  RatMatrix m(static_cast<int>(rows.size()), 3);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < 3; ++j) m(static_cast<int>(i), j) = rows[i][j];
  return rank(m);
}

Result riemann_roch() {
  Result r;
  Rng rng(kDefaultSeed);
  const auto f = tf("x*(x-z)*(x+z)*(x-2*z) + y*(x^3 + z^3 + x*y*z + y^2*z)");
  auto row = [](long a, long b, long c) { return std::array<Rat, 3>{Rat(a), Rat(b), Rat(c)}; };

  const std::vector<GroupPoint> collinear{{pt(0, 0, 1)}, {pt(1, 0, 1)}, {pt(-1, 0, 1)}, {pt(2, 0, 1)}};
  r.require(riemann_roch_conditions(f, collinear, rng) ==
                line_rank({row(0, 0, 1), row(1, 0, 1), row(-1, 0, 1), row(2, 0, 1)}),
            "collinear group");
  const std::vector<GroupPoint> general{{pt(0, 0, 1)}, {pt(1, 0, 1)}, {pt(-1, 0, 1)}, {pt(0, 1, 0)}};
  r.require(riemann_roch_conditions(f, general, rng) ==
                line_rank({row(0, 0, 1), row(1, 0, 1), row(-1, 0, 1), row(0, 1, 0)}),
            "general group");
  // A doubled point asks the line to be the tangent: through p and a second point of the tangent.
  const std::array<Rat, 3> p{Rat(0), Rat(0), Rat(1)};
  std::array<Rat, 3> grad;
  for (int i = 0; i < 3; ++i) grad[i] = f.partial(i).eval({p[0], p[1], p[2]});
  const std::array<Rat, 3> along{grad[1], -grad[0], Rat(0)};
  const std::array<Rat, 3> q{p[0] + along[0], p[1] + along[1], p[2] + along[2]};
  r.require(riemann_roch_conditions(f, {{pt(0, 0, 1), 2}}, rng) == line_rank({p, q}), "tangent group");

  // Adjoint lines of the nodal quartic pass through the node (0:0:1).
  const auto nodal = tf("x^4 + x^3*z + x^2*z^2 + y^4 - 2*y^2*z^2");
  r.require(riemann_roch_conditions(nodal, {{pt(1, 1, 2)}, {pt(-1, -1, 1)}}, rng) ==
                line_rank({row(0, 0, 1), row(1, 1, 2), row(-1, -1, 1)}) - line_rank({row(0, 0, 1)}),
            "nodal quartic, pair collinear with the node");
  r.require(riemann_roch_conditions(nodal, {{pt(1, 1, 2)}, {pt(1, -1, 2)}}, rng) ==
                line_rank({row(0, 0, 1), row(1, 1, 2), row(1, -1, 2)}) - line_rank({row(0, 0, 1)}),
            "nodal quartic, general pair");
  return r;
}

Result pencil_double() {
  Result r;
  Rng rng(kDefaultSeed);
  for (const char* src : {"x^3 + y^3 + z^3", "y^2 * z - x^3 - x^2*z", "x^4 + y^4 + z^4",
                          "x^4 + x^3*z + x^2*z^2 + y^4 - 2*y^2*z^2",
                          "x^5 + x^2*y^3 + x^2*y^2*z + x^2*z^3 + 2*x*y*z^3 - y^3*z^2"}) {
    const auto f = tf(src);
    r.require(pencil_double_points(f.degree(), genus(f, rng).p) == *curve_characters(f, rng).nu,
              std::string(src) + ": class");
  }
  // Lines through a point of an elliptic cubic cut a g^1_2; through a point off it, a g^1_3.
  const auto cubic = tf("y^2*z - x^3 + x*z^2 - z^3");
  const ProjPoint on = pt(1, 1, 1), off = pt(1, 2, 3);
  r.require(cubic.eval(on.rat()).is_zero() && !is_flex(cubic, on), "chosen point is an ordinary point");
  r.require(genus(cubic, rng).p == 1, "cubic is elliptic");
  int residual = 0;
  for (const auto& rec : intersect(cubic, first_polar(cubic, on), rng, 0))
    if (!(rec.point && *rec.point == on)) residual += rec.local_multiplicity * rec.count();
  r.require(pencil_double_points(2, 1) == 4 && residual == 4, "elliptic g^1_2");
  r.require(pencil_double_points(3, 1) == 6 && bezout_total(intersect(cubic, first_polar(cubic, off), rng, 0)) == 6,
            "cubic g^1_3");
  return r;
}

Result space_formulas() {
  Result r;
  const auto c22 = ci_characters(2, 2), c23 = ci_characters(2, 3);
  r.require(*c22.n == 4 && *c22.r == 8 && *c22.p == 1 && *c22.d == 2, "ci(2,2)");
  r.require(*c23.n == 6 && *c23.r == 18 && *c23.p == 4 && *c23.d == 6, "ci(2,3)");
  const auto l = linked_characters(LinkageInput{2, 2, 3, 0, std::nullopt});
  r.require(l.i == 2 && l.n2 == 1 && l.p2 == 0, "twisted cubic linkage");
  r.require(2 * (l.p1 - l.p2) == (2 + 2 - 4) * (3 - l.n2), "genus conservation");

  Rng rng(kDefaultSeed);
  const auto q = QuaternaryForm::parse("x*t - y*z");
  const auto c = QuaternaryForm::parse("x^3 + y^3 + z^3 + x*y*t + 2*z^2*t - y*t^2");
  const auto proj = project_ci(q, c, {Rat(0), Rat(0), Rat(0), Rat(1)});
  r.require(proj.center_on_curve, "center on the curve");
  r.require(proj.curve.degree() == 5, "quintic");
  const auto nc = node_cusp_count(proj.curve, rng);
  r.require(nc.nodes == 2 && nc.cusps == 0, "two nodes");
  r.require(genus(proj.curve, rng).p == 4, "genus 4");
  return r;
}

Result castelnuovo() {
  Result r;
  for (long n = 3; n <= 12; ++n) {
    const long chi = n % 2 == 0 ? (n - 2) / 2 : (n - 3) / 2;
    r.require(castelnuovo_bound(n) == chi * (n - chi - 2), "bound for n=" + std::to_string(n));
  }
  for (long n : {4, 6, 8}) r.require(ci_genus(2, n / 2) == castelnuovo_bound(n), "ci(2,n/2) for n=" + std::to_string(n));
  r.require(ci_genus(3, 3) == 10 && castelnuovo_bound(9) == 12, "(3,3)");
  return r;
}

Result postulation_check() {
  Result r;
  const VarList st = st_vars();
  std::vector<BinaryForm> cubic;
  for (int i = 0; i <= 3; ++i) {
    Exponent e{};
    e[0] = static_cast<std::uint16_t>(3 - i);
    e[1] = static_cast<std::uint16_t>(i);
    cubic.emplace_back(MultiPoly::monomial(st, e, Rat(1)), 3);
  }
  const long quadrics = postulation_rank(cubic, 2);
  r.require(quadrics == 7, "conditions on quadrics");
  r.require(10 - quadrics - 1 == 2, "net of quadrics");
  for (int m = 1; m <= 4; ++m) {
    const long rk = postulation_rank(cubic, m);
    r.require(rk == 3 * m + 1 && postulation(3, 0, m).value == rk, "m=" + std::to_string(m));
  }
  return r;
}

Result moduli() {
  Result r;
  r.require(moduli_count(3, 0) == 12, "(3,0)");
  r.require(moduli_count(4, 1) == 16, "(4,1)");
  r.require(moduli_count(5, 2) == 20, "(5,2)");
  return r;
}

Result determinism() {
  Result r;
  std::string reports[2];
  for (auto& rep : reports) {
    std::ostringstream out, err;
    const int code = cli::run({"--seed", "20240917", "--json", "corpus-verify"}, out, err);
    r.require(code == 0, "corpus-verify exit " + std::to_string(code));
    rep = out.str();
  }
  r.require(!reports[0].empty() && reports[0] == reports[1], "reports differ");
  r.summary = std::to_string(reports[0].size()) + " bytes";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"Bezout totals on random pairs", bezout},
      {"cubic character table", cubic_table},
      {"Fermat cubic flexes and their lines", fermat_flexes},
      {"cubic flex pencil discriminant is a cube", flex_pencil},
      {"Plucker closure", plucker_closure},
      {"Noether decompositions", noether},
      {"Cremona law and genus invariance", cremona},
      {"homaloidal arithmetic", homaloidal},
      {"canonical series and n_i - r_i", canonical},
      {"Riemann-Roch condition counts", riemann_roch},
      {"pencil double points", pencil_double},
      {"space curve formulas and projection", space_formulas},
      {"Castelnuovo bound", castelnuovo},
      {"postulation of the twisted cubic", postulation_check},
      {"moduli counts", moduli},
      {"corpus-verify determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = res.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << ". " << criteria[i].first;
    if (!res.summary.empty()) std::cout << " (" << res.summary << ")";
    if (!ok) std::cout << ": " << res.failures.front() << (res.failures.size() > 1 ? " ..." : "");
    std::cout << std::endl;
  }
  return failed;
}
