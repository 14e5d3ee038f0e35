#include "doctest.h"

#include "curvekit/errors.hpp"
#include "curvekit/plucker.hpp"

using namespace curvekit;

namespace {

TernaryForm tf(const char* s) { return TernaryForm::parse(s); }
ProjPoint pt(long a, long b, long c) { return ProjPoint(Rat(a), Rat(b), Rat(c)); }

PluckerChars ndk(long n, long d, long k) {
  PluckerChars c;
  c.n = n;
  c.d = d;
  c.kappa = k;
  return c;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const CurveError& e) {
    return e.kind();
  }
  return ErrorKind::PreconditionViolated;
}

}  // namespace

TEST_CASE("cubic character table") {
  const long expect[3][2] = {{6, 9}, {4, 3}, {3, 1}};
  const long in[3][2] = {{0, 0}, {1, 0}, {0, 1}};
  for (int i = 0; i < 3; ++i) {
    const auto c = plucker_solve(ndk(3, in[i][0], in[i][1]));
    CHECK(*c.nu == expect[i][0]);
    CHECK(*c.rho == expect[i][1]);
    CHECK(plucker_violations(c).empty());
  }
  CHECK(kind_of([] { plucker_solve(ndk(3, 2, 0)); }) == ErrorKind::Inconsistent);
  PluckerChars only;
  only.n = 3;
  only.d = 2;
  try {
    plucker_solve(only);
    FAIL("expected Inconsistent");
  } catch (const CurveError& e) {
    CHECK(e.kind() == ErrorKind::Inconsistent);
    CHECK(std::string(e.what()).find("genus") != std::string::npos);
  }
  PluckerChars under;
  under.n = 5;
  CHECK(kind_of([&] { plucker_solve(under); }) == ErrorKind::Underdetermined);
}

TEST_CASE("smooth quartic characters") {
  // oracle: class and flex counts by hand, then the dual class solved for delta
  const long n = 4, nu = n * (n - 1), rho = 3 * n * (n - 2);
  const long delta = (nu * (nu - 1) - n - 3 * rho) / 2;
  const auto c = plucker_solve(ndk(4, 0, 0));
  CHECK(*c.nu == nu);
  CHECK(*c.rho == rho);
  CHECK(*c.delta == delta);
  CHECK(*c.delta == 28);
  CHECK(*c.p == 3);
}

TEST_CASE("closure and duality of completed records") {
  for (long n = 2; n <= 8; ++n)
    for (long d = 0; d <= 3; ++d)
      for (long k = 0; k <= 3; ++k) {
        PluckerChars c;
        try {
          c = plucker_solve(ndk(n, d, k));
        } catch (const CurveError& e) {
          CHECK((e.kind() == ErrorKind::Inconsistent || e.kind() == ErrorKind::Underdetermined));
          continue;
        }
        CHECK(3 * *c.nu - *c.rho == 3 * n - k);
        CHECK(plucker_violations(c).empty());
        CHECK(plucker_violations(dual_chars(c)).empty());
        // solving from the dual side recovers the record
        PluckerChars back;
        back.nu = c.nu;
        back.delta = c.delta;
        back.rho = c.rho;
        const auto r = plucker_solve(back);
        CHECK(*r.n == n);
        CHECK(*r.d == d);
        CHECK(*r.kappa == k);
      }
}

TEST_CASE("first polar") {
  CHECK(first_polar(tf("x^3+y^3+z^3"), pt(1, 0, 0)).poly() == parse("3*x^2", xyz_vars()));
  // conic polarity: polar of (1:2:3) for x^2+y^2-z^2 is x + 2y - 3z (times 2)
  CHECK(first_polar(tf("x^2+y^2-z^2"), pt(1, 2, 3)).poly() == parse("2*x+4*y-6*z", xyz_vars()));
  CHECK(first_polar(tf("x^4+y^4+z^4+x*y*z^2"), pt(1, 1, 2)).degree() == 3);
  CHECK(kind_of([] { first_polar(tf("y^3+z^3"), pt(1, 0, 0)); }) == ErrorKind::ZeroPolar);
}

TEST_CASE("class and flex counts of cubics") {
  Rng rng(1);
  CHECK(curve_class(tf("x^3+y^3+z^3"), rng) == 6);
  CHECK(flex_count(tf("x^3+y^3+z^3"), rng) == 9);
  CHECK(curve_class(tf("y^2*z-x^2*(x+z)"), rng) == 4);
  CHECK(flex_count(tf("y^2*z-x^2*(x+z)"), rng) == 3);
  CHECK(curve_class(tf("y^2*z-x^3"), rng) == 3);
  CHECK(flex_count(tf("y^2*z-x^3"), rng) == 1);
  CHECK(kind_of([&] { curve_class(tf("y^2*z^2-x^4-y^4"), rng); }) == ErrorKind::UnsupportedSingularity);
}

TEST_CASE("Hessian") {
  CHECK(hessian(tf("x^3+y^3+z^3")).poly == parse("216*x*y*z", xyz_vars()));
  const auto h2 = hessian(tf("x^2+y^2-z^2"));
  CHECK(h2.constant);
  CHECK(h2.poly.is_constant());
  CHECK_FALSE(h2.poly.is_zero());
  // the Hessian passes through nodes and cusps
  for (const char* s : {"y^2*z-x^2*(x+z)", "y^2*z-x^3", "x^4+y^4-x^2*z^2+y^2*z^2"}) {
    const auto h = hessian(tf(s)).poly;
    CHECK(h.eval({Rat(0), Rat(0), Rat(1)}).is_zero());
  }
}

TEST_CASE("flex locations") {
  Rng rng(2);
  const auto fl = flexes(tf("x^3+y^3+z^3"), rng);
  CHECK(flex_total(fl) == 9);
  std::vector<ProjPoint> rational;
  for (const auto& f : fl) {
    CHECK(f.contact == 3);
    if (f.point) rational.push_back(*f.point);
  }
  std::sort(rational.begin(), rational.end());
  REQUIRE(rational.size() == 3);
  CHECK(rational[0] == pt(0, 1, -1));
  CHECK(rational[1] == pt(1, -1, 0));
  CHECK(rational[2] == pt(1, 0, -1));
  CHECK(flex_total(flexes(tf("y^2*z-x^2*(x+z)"), rng)) == 3);
  CHECK(flex_total(flexes(tf("y^2*z-x^3"), rng)) == 1);
  // a quartic with a hyperflex: x^4 + y^4 = (y - z) ... tangent y=z meets with contact 4
  const auto q = tf("x^4+y^4+z^4");
  CHECK(flex_total(flexes(q, rng)) == flex_count(q, rng));
}

TEST_CASE("dual curves") {
  Rng rng(3);
  CHECK(dual_curve(tf("x^2+y^2-z^2"), rng).poly() == parse("u^2+v^2-w^2", uvw_vars()));
  const auto d = dual_curve(tf("y^2*z-x^2*(x+z)"), rng);
  CHECK(d.degree() == 4);
  CHECK(dual_curve(tf("y^2*z-x^3"), rng).degree() == 3);
  // biduality for a conic
  const auto c = tf("2*x^2+3*y^2-5*z^2+x*y");
  const auto dd = dual_curve(TernaryForm(dual_curve(c, rng).poly().with_vars(xyz_vars())), rng);
  CHECK(normalized(TernaryForm(dd.poly().with_vars(xyz_vars()))) == normalized(c));
  // the dual of the Fermat cubic has degree 6
  CHECK(dual_curve(tf("x^3+y^3+z^3"), rng).degree() == 6);
}

TEST_CASE("class equals tangency count from a polar") {
  Rng rng(4);
  for (const char* s : {"x^3+y^3+z^3", "y^2*z-x^2*(x+z)", "y^2*z-x^3", "x^4+y^4+z^4"}) {
    const TernaryForm f = tf(s);
    const auto sing = classify_singularities(f, rng, 0);
    const auto polar = first_polar(f, pt(7, -3, 5));
    int tangencies = 0;
    for (const auto& r : intersect(f, polar, rng, 0)) {
      bool singular = false;
      for (const auto& sp : sing) singular = singular || (r.point && sp.point && *r.point == *sp.point);
      if (!singular) tangencies += r.count() * r.local_multiplicity;
    }
    CHECK(tangencies == curve_class(f, rng));
  }
}

TEST_CASE("cubic flex pencil of the Fermat cubic") {
  Rng rng(5);
  const auto c = cubic_flex_pencil(tf("x^3+y^3+z^3"), rng);
  CHECK(c.discriminant_degree == 12);
  CHECK(c.quartic_roots.infinity_multiplicity == 1);
  CHECK(c.flex_points.size() == 9);
  CHECK(c.lines.size() == 12);
  CHECK(c.each_flex_on_four_lines);
  CHECK(c.max_incidence_error < 1e-30);
  int with_triangle[4] = {0, 0, 0, 0};
  for (const auto& l : c.lines) {
    REQUIRE(l.triangle >= 0);
    ++with_triangle[l.triangle];
  }
  for (int t : with_triangle) CHECK(t == 3);
  // xyz itself is the member at infinity
  REQUIRE(c.triangles.back());
  CHECK(normalized(*c.triangles.back()).poly() == parse("x*y*z", xyz_vars()));
}
