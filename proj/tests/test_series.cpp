#include "doctest.h"

#include "curvekit/errors.hpp"
#include "curvekit/plucker.hpp"
#include "curvekit/series.hpp"

using namespace curvekit;

namespace {

TernaryForm tf(const char* s) { return TernaryForm::parse(s); }
ProjPoint pt(long a, long b, long c) { return ProjPoint(Rat(a), Rat(b), Rat(c)); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const CurveError& e) {
    return e.kind();
  }
  return ErrorKind::PreconditionViolated;
}

TernaryForm random_member(const LinearSystemReport& sys, Rng& rng) {
  MultiPoly g(xyz_vars());
  for (const auto& b : sys.basis) g += b.poly() * Rat(rng.uniform(-9, 9));
  return TernaryForm(g);
}

// A quartic with a node at (0:0:1) through (1:0:1) and (2:0:1).
TernaryForm nodal_quartic(Rng& rng) {
  const auto sys = system_dimension(4, {LinearCondition(pt(0, 0, 1), 2), LinearCondition(pt(1, 0, 1)), LinearCondition(pt(2, 0, 1))});
  for (;;) {
    const TernaryForm f = random_member(sys, rng);
    const auto s = classify_singularities(f, rng, 0);
    if (s.size() == 1 && s[0].kind == SingularKind::Node) return f;
  }
}

TernaryForm two_nodal_quintic(Rng& rng) {
  const auto sys = system_dimension(5, {LinearCondition(pt(1, 0, 0), 2), LinearCondition(pt(0, 1, 0), 2)});
  for (;;) {
    const TernaryForm f = random_member(sys, rng);
    const auto s = classify_singularities(f, rng, 0);
    if (s.size() == 2 && s[0].kind == SingularKind::Node && s[1].kind == SingularKind::Node) return f;
  }
}

// Smooth quartic meeting y = 0 at x = 0, 1, -1, 2 and passing through (0:1:0).
TernaryForm quartic_with_line_group() { return tf("x*(x-z)*(x+z)*(x-2*z) + y*(x^3 + z^3 + x*y*z + y^2*z)"); }

}  // namespace

TEST_CASE("irreducibility") {
  Rng rng;
  CHECK(absolute_factor_count(tf("x^4 + y^4 + z^4"), rng) == 1);
  CHECK(absolute_factor_count(tf("y^2*z^2 - x^4"), rng) == 2);
  CHECK(absolute_factor_count(tf("x^2 + y^2"), rng) == 2);
  CHECK(absolute_factor_count(tf("(x^2 + y^2 - z^2)*(x - 3*y + z)*(y - 2*z)"), rng) == 3);
  try {
    require_irreducible(tf("y^2*z^2 - x^4"), rng);
    FAIL("expected Reducible");
  } catch (const CurveError& e) {
    CHECK(e.kind() == ErrorKind::Reducible);
    CHECK(std::string(e.what()).find("factor") != std::string::npos);
  }
  CHECK(kind_of([&] { genus(tf("x^2 + y^2"), rng); }) == ErrorKind::Reducible);
}

TEST_CASE("genus") {
  Rng rng;
  CHECK(genus(tf("x^4 + y^4 + z^4"), rng).p == 3);
  CHECK(genus(tf("y^2*z - x^3 - x^2*z"), rng).p == 0);
  CHECK(genus(tf("y^2*z - x^3"), rng).p == 0);
  CHECK(genus(tf("x^3 + y^3 + z^3"), rng).p == 1);
  CHECK(genus(nodal_quartic(rng), rng).p == 2);
  CHECK(genus(two_nodal_quintic(rng), rng).p == 4);
  const auto tac = genus(tf("y^2*z^2 - x^4 - y^4"), rng);
  CHECK(tac.p == 1);
  CHECK(tac.resolution_steps >= 1);
  CHECK(genus(tf("z*(x^3 - x*y^2) + x^4 + y^4"), rng).p == 0);
}

TEST_CASE("genus is invariant along resolution steps") {
  Rng rng(5);
  for (const char* src : {"y^2*z - x^3", "y^2*z^2 - x^4 - y^4", "z*y^3 - x^4"}) {
    const auto res = resolve(tf(src), rng);
    for (const auto& s : res.steps) CHECK(genus(s.before, rng).p == genus(s.after, rng).p);
  }
  const auto img = net_image(tf("x^2*z - y^2*z + x^3"), tf("x*y"), tf("y*z"), tf("x^2 + x*z"), rng);
  CHECK(genus(img.image, rng).p == 0);
}

TEST_CASE("adjoints and cut series") {
  Rng rng;
  const auto smooth = tf("x^4 + y^4 + z^4");
  const auto nodal = nodal_quartic(rng);
  CHECK(adjoint_system(nodal, 1, rng).effective_dim == 1);
  CHECK(adjoint_system(smooth, 1, rng).effective_dim == 2);
  CHECK(adjoint_system(tf("y^2*z - x^3 - x^2*z"), 0, rng).effective_dim == -1);

  auto s = cut_series(smooth, adjoint_system(smooth, 1, rng), rng);
  CHECK(s.order == 4);
  CHECK(s.dimension == 2);
  s = cut_series(nodal, adjoint_system(nodal, 1, rng), rng);
  CHECK(s.order == 2);
  CHECK(s.dimension == 1);
  s = cut_series(smooth, system_dimension(1, {LinearCondition(pt(1, 2, 3))}), rng);
  CHECK(s.order == 4);
  CHECK(s.dimension == 1);
  CHECK(kind_of([&] { cut_series(tf("x"), system_dimension(1, {LinearCondition(pt(0, 1, 0)), LinearCondition(pt(0, 0, 1))}), rng); }) ==
        ErrorKind::AllMembersContainCurve);
}

TEST_CASE("canonical series") {
  Rng rng;
  auto c = canonical_series(tf("x^4 + y^4 + z^4"), rng);
  CHECK(c.series.order == 4);
  CHECK(c.series.dimension == 2);
  CHECK(c.epsilon == 0);
  c = canonical_series(nodal_quartic(rng), rng);
  CHECK(c.series.order == 2);
  CHECK(c.series.dimension == 1);
  c = canonical_series(tf("x^5 + y^5 + z^5"), rng);
  CHECK(c.series.order == 10);
  CHECK(c.series.dimension == 5);
  c = canonical_series(tf("x^3 + y^3 + z^3"), rng);
  CHECK(c.series.order == 0);
  CHECK(c.series.dimension == 0);
  CHECK(kind_of([&] { canonical_series(tf("y^2*z - x^3 - x^2*z"), rng); }) == ErrorKind::NoCanonical);
}

TEST_CASE("series formulas against adjoint ranks") {
  CHECK(series_formulas(4, 3, 3) == std::pair<long, long>{16, 13});
  CHECK(series_formulas(3, 1, 3) == std::pair<long, long>{9, 8});
  Rng rng(2);
  const std::vector<TernaryForm> curves{tf("y^2*z - x^3 - x^2*z"), tf("x^4 + y^4 + z^4"), nodal_quartic(rng)};
  for (const auto& f : curves) {
    const long p = genus(f, rng).p;
    for (int i = 3; i <= 4; ++i) {
      const auto [ni, ri] = series_formulas(f.degree(), p, i);
      CHECK(ni - ri == p);
      const auto s = cut_series(f, adjoint_system(f, f.degree() - 3 + i, rng), rng);
      CHECK(s.order == ni);
      CHECK(s.dimension == ri);
      CHECK(p >= s.order - s.dimension);
    }
  }
}

TEST_CASE("riemann roch conditions") {
  Rng rng;
  const auto f = quartic_with_line_group();
  REQUIRE(classify_singularities(f, rng, 0).empty());
  const std::vector<GroupPoint> line{{pt(0, 0, 1)}, {pt(1, 0, 1)}, {pt(-1, 0, 1)}, {pt(2, 0, 1)}};
  CHECK(riemann_roch_conditions(f, line, rng) == 2);
  const std::vector<GroupPoint> general{{pt(0, 0, 1)}, {pt(1, 0, 1)}, {pt(-1, 0, 1)}, {pt(0, 1, 0)}};
  CHECK(riemann_roch_conditions(f, general, rng) == 3);
  CHECK(riemann_roch_conditions(f, {{pt(0, 0, 1), 2}}, rng) == 2);
  CHECK(kind_of([&] { riemann_roch_conditions(f, {{pt(1, 1, 1)}}, rng); }) == ErrorKind::GroupOffCurve);
  const auto nodal = nodal_quartic(rng);
  CHECK(riemann_roch_conditions(nodal, {{pt(1, 0, 1)}, {pt(2, 0, 1)}}, rng) == 1);
}

TEST_CASE("double points of series") {
  Rng rng;
  CHECK(pencil_double_points(3, 1) == 6);
  CHECK(pencil_double_points(2, 1) == 4);
  for (long n = 1; n < 6; ++n)
    for (long p = 0; p < 6; ++p) CHECK(series_multiple_points(1, n, p) == pencil_double_points(n, p));
  for (const auto& f : {tf("x^3 + y^3 + z^3"), tf("y^2*z - x^3 - x^2*z"), tf("x^4 + y^4 + z^4"), nodal_quartic(rng)})
    CHECK(curve_class(f, rng) == pencil_double_points(f.degree(), genus(f, rng).p));
}

TEST_CASE("projection test") {
  Rng rng;
  CHECK(projection_completeness_test(tf("x^4 + y^4 + z^4"), rng).verdict == ProjectionVerdict::NotProjection);
  CHECK(projection_completeness_test(tf("y^2*z - x^3 - x^2*z"), rng).verdict == ProjectionVerdict::Projection);
  const auto q = projection_completeness_test(two_nodal_quintic(rng), rng);
  CHECK(q.p == 4);
  CHECK(q.adjoints->superabundance == 0);
  CHECK(q.verdict == ProjectionVerdict::NotProjection);
}
