#include "doctest.h"

#include "curvekit/errors.hpp"
#include "curvekit/forms.hpp"
#include "curvekit/multipoly.hpp"
#include "curvekit/random.hpp"

using namespace curvekit;

namespace {

MultiPoly random_poly(Rng& rng, const VarList& vars, int max_deg, int terms) {
  MultiPoly p(vars);
  for (int i = 0; i < terms; ++i) {
    Exponent e{};
    int left = static_cast<int>(rng.uniform(0, max_deg));
    for (std::size_t v = 0; v < vars->size() && left > 0; ++v) {
      const int k = static_cast<int>(rng.uniform(0, left));
      e[v] = static_cast<std::uint16_t>(k);
      left -= k;
    }
    p.add_term(e, Rat(rng.uniform(-9, 9), rng.uniform(1, 4)));
  }
  return p;
}

MultiPoly random_form(Rng& rng, int deg) {
  MultiPoly p(xyz_vars());
  for (const auto& e : monomials_of_degree(3, deg)) p.add_term(e, Rat(rng.uniform(-5, 5)));
  return p;
}

}  // namespace

TEST_CASE("parse reads the grammar") {
  const auto f = parse("x^2+y^2-z^2", xyz_vars());
  CHECK(f.size() == 3);
  CHECK(TernaryForm(f).degree() == 2);
  CHECK(parse("0", xyz_vars()).is_zero());
  CHECK(parse("x^3 + y^3 + z^3 - 3*x*y*z", xyz_vars()).size() == 4);
  CHECK(parse("1/2*x - (y - 3/4)^2", xyz_vars()) ==
        parse("-y^2 + 1/2*x + 3/2*y - 9/16", xyz_vars()));
  CHECK(parse("-(x)^2", xyz_vars()) == Rat(-1) * parse("x*x", xyz_vars()));
}

TEST_CASE("parse errors") {
  try {
    parse("x + * y", xyz_vars());
    FAIL("expected SyntaxError");
  } catch (const CurveError& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  try {
    parse("x + w", xyz_vars());
    FAIL("expected UnknownVariable");
  } catch (const CurveError& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
  }
}

TEST_CASE("homogenize and dehomogenize") {
  const auto xy = make_vars({"x", "y"});
  const auto a = homogenize(parse("y - x^2", xy), "z");
  CHECK(a == parse("y*z - x^2", xyz_vars()));
  CHECK(homogenize(parse("x + 1", xy), "z") == parse("x + z", xyz_vars()));
  CHECK(homogenize(parse("x^2*y - 1", xy), "z") == parse("x^2*y - z^3", xyz_vars()));
  Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_poly(rng, xy, 5, 6);
    if (p.is_zero()) continue;
    const auto h = homogenize(p, "z");
    CHECK(h.is_homogeneous());
    CHECK(h.total_degree() == p.total_degree());
    CHECK(dehomogenize(h, 2).with_vars(xy) == p);
  }
}

TEST_CASE("partial derivatives") {
  CHECK(parse("x^3+y^3+z^3", xyz_vars()).partial(0) == parse("3*x^2", xyz_vars()));
  CHECK(parse("x*y*z", xyz_vars()).partial(1) == parse("x*z", xyz_vars()));
  CHECK(MultiPoly(xyz_vars(), Rat(5)).partial(0).is_zero());
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(rng, xyz_vars(), 7, 8);
    CHECK(p.partial(0).partial(1) == p.partial(1).partial(0));
    CHECK(p.partial(1).partial(2) == p.partial(2).partial(1));
  }
}

TEST_CASE("ring laws hold exactly") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(rng, xyz_vars(), 4, 5);
    const auto q = random_poly(rng, xyz_vars(), 4, 5);
    const auto r = random_poly(rng, xyz_vars(), 4, 5);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p - p).is_zero());
    if (!q.is_zero()) CHECK(exact_div(p * q, q) == p);
  }
}

TEST_CASE("print and parse round trip") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(rng, xyz_vars(), 6, 7);
    CHECK(parse(p.str(), xyz_vars()) == p);
  }
}

TEST_CASE("Euler identity for forms") {
  CHECK(euler_combination(parse("x^2+y^2-z^2", xyz_vars())).is_zero());
  CHECK(euler_combination(parse("x*y*z", xyz_vars())).is_zero());
  CHECK(euler_combination(parse("x^3+y^3+z^3-3*x*y*z", xyz_vars())).is_zero());
  Rng rng(13);
  for (int d = 1; d <= 8; ++d) CHECK(euler_combination(random_form(rng, d)).is_zero());
  CHECK_FALSE(euler_combination(parse("x^2 + y", xyz_vars())).is_zero());
}

TEST_CASE("projective points are normalized") {
  CHECK(ProjPoint(Rat(-2), Rat(4), Rat(6)).str() == "(1:-2:-3)");
  CHECK(ProjPoint(Rat(0), Rat(1, 2), Rat(-1, 3)).str() == "(0:3:-2)");
  CHECK(ProjPoint(Rat(2), Rat(0), Rat(0)) == ProjPoint(Rat(-5), Rat(0), Rat(0)));
}

TEST_CASE("linear substitution composes") {
  Rng rng(17);
  const auto f = random_form(rng, 3);
  const RatMatrix a = random_invertible(rng, 3, 3);
  const RatMatrix b = random_invertible(rng, 3, 3);
  const RatMatrix ab = a * b;
  CHECK(linear_substitute(linear_substitute(f, a), b) == linear_substitute(f, ab));
  CHECK(from_bipoly(to_bipoly(f), 3, xyz_vars()) == f);
}
