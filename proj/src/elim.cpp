#include "curvekit/elim.hpp"

#include <algorithm>

#include "curvekit/errors.hpp"
#include "curvekit/linalg.hpp"

namespace curvekit {

SylvesterMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::size_t v) {
  SylvesterMatrix s;
  s.m = f.degree_in(v);
  s.n = g.degree_in(v);
  if (s.m <= 0 || s.n <= 0) throw CurveError(ErrorKind::DegreeZero, "resultant needs positive degree in the eliminated variable");
  const int size = s.m + s.n;
  const VarList& vars = f.vars() ? f.vars() : g.vars();
  s.entries.assign(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j <= s.m; ++j) s.entries[i][i + j] = f.coefficient_of(v, s.m - j);
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j <= s.n; ++j) s.entries[s.n + i][i + j] = g.coefficient_of(v, s.n - j);
  return s;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t v) {
  SylvesterMatrix s = sylvester_matrix(f, g, v);
  MultiPoly r = bareiss_determinant(std::move(s.entries));
  const VarList& vars = f.vars() ? f.vars() : g.vars();
  return r.vars() ? r : r.with_vars(vars);
}

MultiPoly discriminant(const MultiPoly& f, std::size_t v) {
  const int n = f.degree_in(v);
  if (n < 2) throw CurveError(ErrorKind::DomainError, "discriminant needs degree at least 2");
  MultiPoly r = resultant(f, f.partial(v), v);
  if ((n * (n - 1) / 2) % 2) r = -r;
  return exact_div(r, f.coefficient_of(v, n));
}

QPoly to_qpoly(const MultiPoly& f, std::size_t v) {
  std::vector<Rat> c(std::max(f.degree_in(v) + 1, 0));
  for (const auto& [e, x] : f.terms()) {
    for (std::size_t w = 0; w < f.nvars(); ++w)
      if (w != v && e[w]) throw CurveError(ErrorKind::DomainError, "polynomial is not univariate");
    c[e[v]] += x;
  }
  return QPoly(std::move(c));
}

MultiPoly from_qpoly(const QPoly& p, const VarList& vars, std::size_t v) {
  MultiPoly r(vars);
  for (int i = 0; i <= p.degree(); ++i) {
    Exponent e{};
    e[v] = static_cast<std::uint16_t>(i);
    r.add_term(e, p.coeffs()[i]);
  }
  return r;
}

int RootSet::total() const {
  int s = 0;
  for (const auto& [r, m] : rational) s += m;
  for (const auto& [m, c] : nonrational_count_by_multiplicity) s += m * c;
  return s;
}

int RootSet::distinct() const {
  int s = static_cast<int>(rational.size());
  for (const auto& [m, c] : nonrational_count_by_multiplicity) s += c;
  return s;
}

RootSet locate_roots(const QPoly& f, unsigned bits) {
  if (f.is_zero_poly()) throw CurveError(ErrorKind::DomainError, "cannot locate the roots of the zero polynomial");
  RootSet out;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    QPoly rest = factor;
    for (const Rat& r : rational_roots(factor)) {
      out.rational.emplace_back(r, mult);
      rest = exact_div(rest, QPoly(std::vector<Rat>{-r, Rat(1)}));
    }
    if (rest.degree() < 1) continue;
    out.nonrational_count_by_multiplicity[mult] += rest.degree();
    if (bits == 0) continue;
    for (auto& iso : isolate_roots(rest, bits)) out.numeric.push_back({iso.z, iso.radius, mult});
  }
  std::sort(out.rational.begin(), out.rational.end());
  return out;
}

Rat binary_resultant(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (m == 0) return pow(a[0], n);
  if (n == 0) return pow(b[0], m);
  std::vector<std::vector<Rat>> s(m + n, std::vector<Rat>(m + n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[j];
  return bareiss_determinant(std::move(s));
}

namespace {

// Product of the conjugates of a (an element of Q[x]/(q), q monic).
Rat norm(const QPoly& q, const QPoly& a) {
  const QPoly r = a % q;
  if (r.is_zero_poly()) return Rat(0);
  return resultant(q, r);
}

std::vector<Rat> at_infinity(const MultiPoly& f) {
  const int d = f.total_degree();
  std::vector<Rat> c;
  for (int k = 0; k <= d; ++k) {
    Exponent e{};
    e[0] = static_cast<std::uint16_t>(d - k);
    e[1] = static_cast<std::uint16_t>(k);
    c.push_back(f.coeff(e));
  }
  return c;
}

QPoly interpolate(const std::vector<Rat>& xs, std::vector<Rat> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly p(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) p = p * QPoly(std::vector<Rat>{-xs[i], Rat(1)}) + QPoly(ys[i]);
  return p;
}

std::vector<MultiPoly> gradient(const MultiPoly& f) { return {f.partial(0), f.partial(1), f.partial(2)}; }

}  // namespace

std::optional<Rat> ternary_resultant(const MultiPoly& f0, const MultiPoly& f1, const MultiPoly& f2,
                                     const RatMatrix& frame, Rng& rng) {
  const MultiPoly g0 = linear_substitute(f0, frame);
  const MultiPoly g1 = linear_substitute(f1, frame);
  const MultiPoly g2 = linear_substitute(f2, frame);
  const int d0 = f0.total_degree();
  const Rat base = binary_resultant(at_infinity(g1), at_infinity(g2));
  if (base.is_zero()) return std::nullopt;
  std::vector<PointBlock> blocks;
  try {
    blocks = solve_pair(g1, g2, rng);
  } catch (const CurveError& e) {
    if (e.kind() == ErrorKind::CommonComponent || e.kind() == ErrorKind::ShearExhausted) return std::nullopt;
    throw;
  }
  Rat value = pow(base, d0);
  for (const auto& b : blocks) {
    const Rat nz = norm(b.minpoly, b.coords[2]);
    if (nz.is_zero()) return std::nullopt;
    const ResidueRing k(b.minpoly);
    const Rat nv = norm(b.minpoly, eval_at(k, g0, b.coord_vector()));
    value *= pow(nv / pow(nz, d0), b.multiplicity);
    if (value.is_zero()) break;
  }
  return value;
}

MultiPoly gcd_of(const std::vector<MultiPoly>& polys, Rng& rng) {
  std::vector<MultiPoly> nz;
  for (const auto& p : polys)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty()) return MultiPoly();
  MultiPoly best;
  for (int round = 0; round < 2; ++round) {
    MultiPoly g = nz[0];
    for (std::size_t i = 1; i < nz.size() && g.total_degree() > 0; ++i) {
      if (nz[i].is_constant()) {
        g = MultiPoly(nz[0].vars(), Rat(1));
        break;
      }
      g = ternary_gcd(g, nz[i], rng);
    }
    g = primitive_integer(g);
    bool divides = true;
    for (const auto& p : nz) divides = divides && try_divide(p, g).has_value();
    if (divides && (best.is_zero() || g.total_degree() > best.total_degree())) best = g;
  }
  if (best.is_zero()) return MultiPoly(nz[0].vars(), Rat(1));
  return best;
}

std::optional<MultiPoly> repeated_factor(const MultiPoly& f, Rng& rng) {
  std::vector<MultiPoly> all{f};
  for (std::size_t v = 0; v < f.nvars(); ++v) all.push_back(f.partial(v));
  const MultiPoly g = gcd_of(all, rng);
  if (g.total_degree() <= 0) return std::nullopt;
  return g;
}

namespace {

// Characteristic polynomial of u = a/b over Q[t]/(q), in the variable x.
QPoly charpoly(const QPoly& q, const QPoly& a, const QPoly& b) {
  const ResidueRing k(q);
  const QPoly u = k.div(a, b);
  std::vector<QPoly> lin;
  for (int j = 0; j <= std::max(u.degree(), 1); ++j) lin.push_back(QPoly(Rat(-1) * u.coeff(j)));
  lin[0] += QPoly::variable();
  std::vector<QPoly> qc;
  for (const auto& c : q.coeffs()) qc.push_back(QPoly(c));
  return monic(resultant_y(BiPoly(qc), BiPoly(lin)));
}

}  // namespace

SingularityWitness curve_is_singular(const TernaryForm& f, Rng& rng) {
  SingularityWitness w;
  w.frame = identity3();
  if (f.degree() < 2) return w;
  if (auto h = repeated_factor(f.poly(), rng))
    throw CurveError(ErrorKind::NotACurve, "repeated factor " + h->str());
  const auto grad = gradient(f.poly());
  std::vector<PointBlock> blocks;
  bool done = false;
  for (int attempt = 0; attempt < 16 && !done; ++attempt) {
    const RatMatrix a = attempt == 0 ? RatMatrix(identity3()) : random_invertible(rng, 3, 3);
    MultiPoly g1(f.poly().vars()), g2(f.poly().vars());
    for (int j = 0; j < 3; ++j) {
      g1 += grad[j] * a(0, j);
      g2 += grad[j] * a(1, j);
    }
    if (g1.is_zero() || g2.is_zero()) continue;
    try {
      blocks = solve_pair(g1, g2, rng);
      done = true;
    } catch (const CurveError& e) {
      if (e.kind() != ErrorKind::CommonComponent) throw;
    }
  }
  if (!done) throw CurveError(ErrorKind::ShearExhausted, "partials kept sharing a component");
  std::vector<PointBlock> sing;
  for (const auto& b : blocks) {
    auto parts = split_apply<bool>(b.minpoly, [&](const ResidueRing& k) {
      for (const auto& g : grad)
        if (!k.is_zero(eval_at(k, g, b.coord_vector()))) return false;
      return true;
    });
    for (const auto& [piece, yes] : parts)
      if (yes) sing.push_back(b.restrict_to(piece));
  }
  for (auto& b : sing) b.multiplicity = 1;
  w.points = split_rational(sing);
  w.singular = !w.points.empty();
  if (!w.singular) {
    w.x_polynomial = QPoly(Rat(1));
    w.x_roots = locate_roots(w.x_polynomial, 0);
    return w;
  }
  // Choose a frame in which the singular points have distinct finite
  // x-coordinates, and record those coordinates.
  for (int attempt = 0; attempt < 32; ++attempt) {
    const RatMatrix3 m = attempt == 0 ? identity3() : RatMatrix3(random_invertible(rng, 3, 2 + attempt / 4));
    const RatMatrix3 mi = *inverse(m);
    QPoly prod(Rat(1));
    bool ok = true;
    for (const auto& b : w.points) {
      std::array<QPoly, 3> c;
      for (int i = 0; i < 3; ++i)
        c[i] = (mi(i, 0) * b.coords[0] + mi(i, 1) * b.coords[1] + mi(i, 2) * b.coords[2]) % b.minpoly;
      if (norm(b.minpoly, c[2]).is_zero()) {
        ok = false;
        break;
      }
      prod = prod * charpoly(b.minpoly, c[0], c[2]);
    }
    if (ok && squarefree_part(prod).degree() == prod.degree()) {
      w.frame = m;
      w.x_polynomial = prod;
      w.x_roots = locate_roots(prod, 53);
      return w;
    }
  }
  throw CurveError(ErrorKind::ShearExhausted, "no frame separates the singular points");
}

PencilDiscriminant pencil_singular_members(const TernaryForm& f, const TernaryForm& g, Rng& rng, unsigned bits) {
  const int n = f.degree();
  if (g.degree() != n) throw CurveError(ErrorKind::PreconditionViolated, "pencil members must have equal degree");
  if (n < 2) throw CurveError(ErrorKind::PreconditionViolated, "pencil discriminant needs degree at least 2");
  if (f.poly() * g.poly().leading_coeff() == g.poly() * f.poly().leading_coeff())
    throw CurveError(ErrorKind::PreconditionViolated, "pencil generators are proportional");
  PencilDiscriminant out;
  out.expected_degree = 3 * (n - 1) * (n - 1);
  const int need = out.expected_degree + 2;  // one extra sample as a check
  const auto gf = gradient(f.poly());
  const auto gg = gradient(g.poly());
  for (int attempt = 0; attempt < 8; ++attempt) {
    const RatMatrix frame = attempt == 0 ? RatMatrix(identity3()) : random_invertible(rng, 3, 3);
    const RatMatrix comb = attempt == 0 ? RatMatrix(identity3()) : random_invertible(rng, 3, 3);
    std::vector<Rat> xs, ys;
    int failures = 0;
    for (long k = 0; static_cast<int>(xs.size()) < need && failures <= need + 16; ++k) {
      const Rat lambda = (k % 2) ? Rat((k + 1) / 2) : Rat(-k / 2);
      std::array<MultiPoly, 3> h;
      for (int i = 0; i < 3; ++i) {
        h[i] = MultiPoly(f.poly().vars());
        for (int j = 0; j < 3; ++j) h[i] += (gf[j] + gg[j] * lambda) * comb(i, j);
      }
      std::optional<Rat> v;
      if (!h[1].is_zero() && !h[2].is_zero()) v = ternary_resultant(h[0], h[1], h[2], frame, rng);
      if (!v) {
        ++failures;
        continue;
      }
      xs.push_back(lambda);
      ys.push_back(*v);
    }
    if (static_cast<int>(xs.size()) < need) continue;
    const Rat check_x = xs.back(), check_y = ys.back();
    xs.pop_back();
    ys.pop_back();
    const QPoly delta = interpolate(xs, ys);
    if (delta.eval(check_x) != check_y) continue;
    if (delta.is_zero_poly()) throw CurveError(ErrorKind::AllMembersSingular, "every member of the pencil is singular");
    out.delta = primitive_integer(delta);
    out.roots = locate_roots(out.delta, bits);
    out.roots.infinity_multiplicity = out.expected_degree - out.delta.degree();
    return out;
  }
  throw CurveError(ErrorKind::AllMembersSingular, "no member of the pencil admits a generic elimination frame");
}

}  // namespace curvekit
