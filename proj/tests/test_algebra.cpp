#include "doctest.h"

#include "curvekit/algebra.hpp"
#include "curvekit/errors.hpp"

using namespace curvekit;

namespace {

QPoly qp(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

MultiPoly f3(const char* s) { return parse(s, xyz_vars()); }

int total(const std::vector<PointBlock>& b) {
  int s = 0;
  for (const auto& x : b) s += x.degree() * x.multiplicity;
  return s;
}

}  // namespace

TEST_CASE("univariate resultant against products of root differences") {
  // (x-1)(x-2) and (x-3): Res = (1-3)(2-3) = 2
  CHECK(resultant(qp({2, -3, 1}), qp({-3, 1})) == Rat(2));
  CHECK(resultant(qp({-1, 0, 1}), qp({-1, 1})) == Rat(0));
  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rat> a, b, c;
    const int da = static_cast<int>(rng.uniform(1, 6)), db = static_cast<int>(rng.uniform(1, 6));
    for (int k = 0; k <= da; ++k) a.push_back(rng.integer(5));
    for (int k = 0; k <= db; ++k) b.push_back(rng.integer(5));
    for (int k = 0; k <= 2; ++k) c.push_back(rng.integer(5));
    const QPoly f(a), g(b), h(c);
    if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
    const int sgn = (f.degree() * g.degree()) % 2 ? -1 : 1;
    CHECK(resultant(f, g) == Rat(sgn) * resultant(g, f));
    CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    CHECK(resultant(f * h, g * h).is_zero());
    CHECK(resultant(f, g).is_zero() == (gcd(f, g).degree() > 0));
  }
}

TEST_CASE("squarefree decomposition reconstructs") {
  const auto d = squarefree_decomposition(qp({-1, 1}) * qp({-1, 1}) * qp({2, 1}));
  REQUIRE(d.size() == 2);
  CHECK(d[0].first == qp({2, 1}));
  CHECK(d[1].second == 2);
  CHECK(squarefree_decomposition(qp({0, 0, 0, 1})).front().second == 3);
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    QPoly f(Rat(1));
    for (int k = 0; k < 4; ++k) f = f * pow(qp({rng.uniform(-3, 3), 1}), static_cast<unsigned>(rng.uniform(1, 3)));
    QPoly back(Rat(1));
    for (const auto& [g, m] : squarefree_decomposition(f)) back = back * pow(g, m);
    CHECK(back == monic(f));
  }
}

TEST_CASE("residue ring splits on zero divisors") {
  // q = (x^2-2)(x-1): the element x-1 is a zero divisor.
  const QPoly q = qp({-2, 0, 1}) * qp({-1, 1});
  const auto parts = split_apply<bool>(q, [](const ResidueRing& k) { return k.is_zero(qp({-1, 1})); });
  REQUIRE(parts.size() == 2);
  int zeros = 0;
  for (const auto& [m, z] : parts) zeros += z;
  CHECK(zeros == 1);
}

TEST_CASE("intersection blocks satisfy Bezout") {
  Rng rng(9);
  auto blocks = solve_pair(f3("x^2+y^2-z^2"), f3("y-z"), rng);
  CHECK(total(blocks) == 2);
  blocks = split_rational(blocks);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].point() == ProjPoint(Rat(0), Rat(1), Rat(1)));
  CHECK(blocks[0].multiplicity == 2);

  blocks = split_rational(solve_pair(f3("y^2*z-x^3"), f3("y^2*z-x^2*(x+z)"), rng));
  CHECK(total(blocks) == 9);

  CHECK_THROWS_AS(solve_pair(f3("x*(x+y)"), f3("x*(y-z)"), rng), CurveError);
  try {
    solve_pair(f3("x*(x+y)"), f3("x*(y-z)"), rng);
  } catch (const CurveError& e) {
    CHECK(e.kind() == ErrorKind::CommonComponent);
    CHECK(std::string(e.what()).find(" x") != std::string::npos);
  }
}

TEST_CASE("nonrational blocks have certified locations") {
  Rng rng(2);
  const auto blocks = solve_pair(f3("x^2-2*z^2"), f3("y"), rng);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].degree() == 2);
  const auto pts = numeric_points(blocks[0], 64);
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) {
    PrecisionGuard g(128);
    const Complex r = p.coords[0] / p.coords[2];
    CHECK(boost::multiprecision::abs(r.re * r.re - 2) < 1e-15);
    CHECK(p.error < 1e-15);
  }
}
