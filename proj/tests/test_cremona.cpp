#include "doctest.h"

#include "curvekit/cremona.hpp"
#include "curvekit/errors.hpp"

using namespace curvekit;

namespace {

TernaryForm tf(const char* s) { return TernaryForm::parse(s); }
ProjPoint pt(long a, long b, long c) { return ProjPoint(Rat(a), Rat(b), Rat(c)); }
QuadraticFrame standard() { return make_frame({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}); }

bool proportional(const TernaryForm& a, const TernaryForm& b) {
  return normalized(a) == normalized(b);
}

}  // namespace

TEST_CASE("quadratic transform of a nodal cubic") {
  const auto f = tf("x*(y^2-z^2) + y^3 + 2*z^3");
  const auto s = std_quadratic_transform(f, standard());
  CHECK(s.multiplicities == std::array<int, 3>{2, 0, 0});
  CHECK(s.after.degree() == 4);
  CHECK(s.after_multiplicities == std::array<int, 3>{3, 1, 1});
  CHECK(s.law_holds);
}

TEST_CASE("quadratic transform is an involution") {
  for (const char* src : {"x*(y^2-z^2) + y^3 + 2*z^3", "x^2 + 2*y^2 - 3*z^2 + x*y", "x^4 + y^4 + z^4 + x*y*z^2"}) {
    const auto f = tf(src);
    const auto once = std_quadratic_transform(f, standard());
    const auto twice = std_quadratic_transform(once.after, standard());
    CHECK(proportional(twice.after, f));
  }
}

TEST_CASE("quadratic transform errors") {
  CHECK_THROWS_AS(make_frame({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)}), CurveError);
  try {
    std_quadratic_transform(tf("x*(y^2+z^2)"), standard());
    FAIL("expected EdgeComponent");
  } catch (const CurveError& e) {
    CHECK(e.kind() == ErrorKind::EdgeComponent);
  }
}

TEST_CASE("homaloidal types") {
  CHECK(homaloidal_check(1, {}));
  CHECK(homaloidal_check(2, {1, 1, 1}));
  CHECK(homaloidal_check(3, {2, 1, 1, 1, 1}));
  CHECK(homaloidal_check(5, {2, 2, 2, 2, 2, 2}));
  CHECK_FALSE(homaloidal_check(3, {2, 1, 1, 1}));
  CHECK_FALSE(homaloidal_check(4, {2, 2, 2}));
}

TEST_CASE("resolution of a cusp and a tacnode") {
  Rng rng;
  const auto cusp = resolve(tf("y^2*z - x^3"), rng);
  CHECK(cusp.steps.size() == 1);
  CHECK(cusp.final_curve.degree() == 4);
  const auto tac = resolve(tf("y^2*z^2 - x^4 - y^4"), rng);
  CHECK(tac.steps.size() >= 1);
  for (const auto& s : tac.steps) CHECK(s.law_holds);
  for (const auto& s : classify_singularities(tac.final_curve, rng, 0)) CHECK(is_ordinary(s));
  const auto smooth = resolve(tf("x^3 + y^3 + z^3"), rng);
  CHECK(smooth.steps.empty());
}

TEST_CASE("net images") {
  Rng rng;
  const auto conic = net_image(tf("y"), tf("x^2"), tf("x*z"), tf("z^2"), rng);
  CHECK(conic.order == 2);
  CHECK(proportional(conic.image, tf("y^2 - x*z")));
  const auto same = net_image(tf("x^3 + y^3 + z^3"), tf("x"), tf("y"), tf("z"), rng);
  CHECK(proportional(same.image, tf("x^3 + y^3 + z^3")));
  // conics through the node and two further points of a nodal cubic
  const auto nodal = net_image(tf("x^2*z - y^2*z + x^3"), tf("x*y"), tf("y*z"), tf("x^2 + x*z"), rng);
  CHECK(nodal.order == 2);
  CHECK(nodal.image.degree() == 2);
  try {
    net_image(tf("x - y"), tf("x^2"), tf("y^2"), tf("z^2"), rng);
    FAIL("expected CollapsedImage");
  } catch (const CurveError& e) {
    CHECK(e.kind() == ErrorKind::CollapsedImage);
  }
}
