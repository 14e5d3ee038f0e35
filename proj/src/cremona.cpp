#include "curvekit/cremona.hpp"

#include <optional>

#include "curvekit/errors.hpp"
#include "curvekit/plucker.hpp"

namespace curvekit {

QuadraticFrame make_frame(const std::array<ProjPoint, 3>& triangle) {
  QuadraticFrame fr{triangle, identity3(), identity3()};
  for (int j = 0; j < 3; ++j) {
    const auto c = triangle[j].rat();
    for (int i = 0; i < 3; ++i) fr.from_standard(i, j) = c[i];
  }
  const auto inv = inverse(fr.from_standard);
  if (!inv) throw CurveError(ErrorKind::TriangleDegenerate, "triangle vertices are collinear");
  fr.to_standard = *inv;
  return fr;
}

namespace {

const std::array<ProjPoint, 3>& vertices() {
  static const std::array<ProjPoint, 3> v{ProjPoint(Rat(1), Rat(0), Rat(0)), ProjPoint(Rat(0), Rat(1), Rat(0)),
                                          ProjPoint(Rat(0), Rat(0), Rat(1))};
  return v;
}

}  // namespace

ResolutionStep std_quadratic_transform(const TernaryForm& f, const QuadraticFrame& frame) {
  const MultiPoly g = linear_substitute(f.poly(), frame.from_standard);
  const VarList& v = g.vars();
  for (int i = 0; i < 3; ++i)
    if (try_divide(g, MultiPoly::variable(v, i)))
      throw CurveError(ErrorKind::EdgeComponent, "a side of the triangle is a component of the curve");
  const TernaryForm gs(g);
  std::array<int, 3> mult{};
  for (int i = 0; i < 3; ++i) mult[i] = multiplicity_at(gs, vertices()[i]);
  const MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1), z = MultiPoly::variable(v, 2);
  MultiPoly t = g.substitute({y * z, x * z, x * y});
  Exponent e{};
  for (int i = 0; i < 3; ++i) e[i] = static_cast<std::uint16_t>(mult[i]);
  t = exact_div(t, MultiPoly::monomial(v, e, Rat(1)));
  ResolutionStep s{frame, f, TernaryForm(primitive_integer(t)), mult, {}, false};
  for (int i = 0; i < 3; ++i) s.after_multiplicities[i] = multiplicity_at(s.after, vertices()[i]);
  const int n = f.degree();
  const int sum = mult[0] + mult[1] + mult[2];
  s.law_holds = s.after.degree() == 2 * n - sum;
  for (int i = 0; i < 3; ++i) s.law_holds = s.law_holds && s.after_multiplicities[i] == n - (sum - mult[i]);
  return s;
}

bool homaloidal_check(int n, const std::vector<int>& a) {
  long sq = 0, tri = 0;
  for (int x : a) {
    sq += static_cast<long>(x) * x;
    tri += static_cast<long>(x) * (x + 1) / 2;
  }
  return sq == static_cast<long>(n) * n - 1 && 2 * tri == static_cast<long>(n) * (n + 3) - 4;
}

NetImage net_image(const TernaryForm& f, const TernaryForm& l, const TernaryForm& m, const TernaryForm& nn, Rng& rng) {
  const int k = l.degree();
  if (m.degree() != k || nn.degree() != k) throw CurveError(ErrorKind::PreconditionViolated, "net members differ in degree");
  {
    const std::vector<MultiPoly> members{l.poly(), m.poly(), nn.poly()};
    RatMatrix coeffs(3, 0);
    const auto monos = monomials_of_degree(3, k);
    coeffs.resize(3, static_cast<int>(monos.size()));
    for (int i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < monos.size(); ++j) coeffs(i, static_cast<int>(j)) = members[i].coeff(monos[j]);
    if (rank(coeffs) < 3) throw CurveError(ErrorKind::PreconditionViolated, "net members are linearly dependent");
    for (const auto& g : members)
      if (gcd_of({f.poly(), g}, rng).total_degree() > 0)
        throw CurveError(ErrorKind::PreconditionViolated, "a net member shares a component with the curve");
  }
  // Order of the cut series: intersections with a general member off the base points.
  auto member = [&] {
    return TernaryForm(l.poly() * rng.integer(7) + m.poly() * rng.integer(7) + nn.poly() * Rat(rng.uniform(1, 7)));
  };
  const TernaryForm g1 = member(), g2 = member();
  int fixed = 0;
  for (const auto& r : intersect(f, g1, rng, 0)) {
    bool base = true;
    auto parts = split_apply<bool>(r.block.minpoly, [&](const ResidueRing& kk) {
      for (const auto* g : {&l, &m, &nn})
        if (!kk.is_zero(eval_at(kk, g->poly(), r.block.coord_vector()))) return false;
      return true;
    });
    for (const auto& [piece, on] : parts) {
      if (!on) continue;
      base = true;
      int other = 0;
      // Multiplicity of the same points against a second member.
      for (const auto& r2 : intersect(f, g2, rng, 0)) {
        if (r2.block.minpoly == piece || (piece.degree() == 1 && r2.point && r.point && *r2.point == *r.point)) {
          other = r2.local_multiplicity;
          break;
        }
      }
      if (other == 0) other = r.local_multiplicity;
      fixed += piece.degree() * std::min(r.local_multiplicity, other);
    }
    (void)base;
  }
  NetImage out{f, f.degree() * k - fixed, 1};
  if (out.order <= 0) throw CurveError(ErrorKind::CollapsedImage, "the net cuts no moving points on the curve");
  const std::vector<MultiPoly> images{l.poly(), m.poly(), nn.poly()};
  for (int e = 1; e <= out.order; ++e) {
    const auto ker = implicitize(f.poly(), images, e, rng, xyz_vars());
    if (ker.empty()) continue;
    if (ker.size() > 1) throw CurveError(ErrorKind::CollapsedImage, "the curve is mapped to a point");
    out.image = TernaryForm(ker[0]);
    if (out.order % e != 0) throw CurveError(ErrorKind::CollapsedImage, "image degree does not divide the series order");
    out.map_degree = out.order / e;
    if (out.map_degree != 1)
      throw CurveError(ErrorKind::CollapsedImage, "map has degree " + std::to_string(out.map_degree) + " onto a curve of degree " +
                                                      std::to_string(e));
    return out;
  }
  throw CurveError(ErrorKind::CollapsedImage, "no image curve found up to the series order");
}

bool is_ordinary(const SingularPoint& s) { return s.distinct_tangents == s.multiplicity; }

namespace {

ProjPoint random_point(Rng& rng, long bound) {
  for (;;) {
    const Rat a = rng.integer(bound), b = rng.integer(bound), c = rng.integer(bound);
    if (!a.is_zero() || !b.is_zero() || !c.is_zero()) return ProjPoint(a, b, c);
  }
}

MultiPoly line_through(const ProjPoint& p, const ProjPoint& q) {
  const auto a = p.rat(), b = q.rat();
  MultiPoly l(xyz_vars());
  l += MultiPoly::variable(xyz_vars(), 0) * (a[1] * b[2] - a[2] * b[1]);
  l += MultiPoly::variable(xyz_vars(), 1) * (a[2] * b[0] - a[0] * b[2]);
  l += MultiPoly::variable(xyz_vars(), 2) * (a[0] * b[1] - a[1] * b[0]);
  return l;
}

// True when the line meets f at `at` with multiplicity exactly `r` and
// transversally everywhere else (or everywhere, when at is null).
bool line_generic(const TernaryForm& f, const MultiPoly& line, const ProjPoint* at, int r, Rng& rng) {
  std::vector<PointBlock> blocks;
  try {
    blocks = solve_pair(f.poly(), line, rng);
  } catch (const CurveError&) {
    return false;
  }
  for (const auto& b : split_rational(blocks)) {
    if (at && b.is_rational() && b.point() == *at) {
      if (b.multiplicity != r) return false;
    } else if (b.multiplicity != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

Resolution resolve(const TernaryForm& f0, Rng& rng, int cap) {
  Resolution res{{}, f0};
  for (int iter = 0;; ++iter) {
    const auto sing = classify_singularities(res.final_curve, rng, 0);
    const SingularPoint* center = nullptr;
    bool pending = false;
    for (const auto& s : sing) {
      if (is_ordinary(s)) continue;
      pending = true;
      if (s.point) {
        center = &s;
        break;
      }
    }
    if (!pending) return res;
    if (!center) throw CurveError(ErrorKind::NonRationalCenter, "all remaining non-ordinary singular points are irrational");
    if (iter >= cap) throw CurveError(ErrorKind::IterationCap, "resolution did not finish within " + std::to_string(cap) + " steps");
    const TernaryForm& f = res.final_curve;
    const ProjPoint x = *center->point;
    const int r = center->multiplicity;
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      const long bound = 3 + attempt / 10;
      const ProjPoint y = random_point(rng, bound), z = random_point(rng, bound);
      const auto yr = y.rat(), zr = z.rat();
      if (f.eval(yr).is_zero() || f.eval(zr).is_zero()) continue;
      std::optional<QuadraticFrame> frame;
      try {
        frame = make_frame({x, y, z});
      } catch (const CurveError&) {
        continue;
      }
      if (!line_generic(f, line_through(x, y), &x, r, rng)) continue;
      if (!line_generic(f, line_through(x, z), &x, r, rng)) continue;
      if (!line_generic(f, line_through(y, z), nullptr, 0, rng)) continue;
      ResolutionStep step = std_quadratic_transform(f, *frame);
      res.final_curve = step.after;
      res.steps.push_back(std::move(step));
      placed = true;
    }
    if (!placed) throw CurveError(ErrorKind::IterationCap, "no generic auxiliary vertices found");
  }
}

}  // namespace curvekit
