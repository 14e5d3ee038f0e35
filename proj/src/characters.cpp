#include "curvekit/characters.hpp"

#include "curvekit/errors.hpp"

namespace curvekit {

namespace {

// Substitutes the known values; unknown variables stay.
MultiPoly partial_eval(const MultiPoly& p, const VarList& vars, const std::vector<std::optional<Int>>& values) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < values.size(); ++i)
    images.push_back(values[i] ? MultiPoly(vars, Rat(*values[i])) : MultiPoly::variable(vars, i));
  MultiPoly r = p.substitute(images);
  return r.vars() ? r : r.with_vars(vars);
}

std::vector<std::size_t> unknowns_in(const MultiPoly& p) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (p.degree_in(v) > 0) out.push_back(v);
  return out;
}

[[noreturn]] void inconsistent(const std::string& name) {
  throw CurveError(ErrorKind::Inconsistent, "violated relation: " + name);
}

// Integer nonnegative roots of a u^2 + b u + c.
std::vector<Int> nonneg_roots(const Rat& a, const Rat& b, const Rat& c) {
  std::vector<Int> out;
  if (a.is_zero()) {
    if (b.is_zero()) return out;
    const Rat u = -c / b;
    if (u.is_integer() && u.sign() >= 0) out.push_back(u.num());
    return out;
  }
  const Int l = lcm(lcm(a.den(), b.den()), c.den());
  const Int ai = (a * Rat(l)).num(), bi = (b * Rat(l)).num(), ci = (c * Rat(l)).num();
  const Int d = bi * bi - 4 * ai * ci;
  if (d < 0) return out;
  Int s;
  mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
  if (s * s != d) return out;
  for (const Int& num : {Int(-bi + s), Int(-bi - s)}) {
    const Rat u(num, Int(2 * ai));
    if (u.is_integer() && u.sign() >= 0) {
      bool seen = false;
      for (const auto& o : out) seen = seen || o == u.num();
      if (!seen) out.push_back(u.num());
    }
  }
  return out;
}

}  // namespace

std::vector<Int> solve_characters(const VarList& vars, const std::vector<CharacterRelation>& relations,
                                  std::vector<std::optional<Int>> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] && *values[i] < 0)
      throw CurveError(ErrorKind::Inconsistent, "character " + (*vars)[i] + " is negative");
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& rel : relations) {
      const MultiPoly r = partial_eval(rel.expr, vars, values);
      const auto u = unknowns_in(r);
      if (u.empty()) {
        if (!r.is_zero()) inconsistent(rel.name);
        continue;
      }
      if (u.size() == 1 && r.degree_in(u[0]) <= 2) {
        const std::size_t v = u[0];
        const auto roots = nonneg_roots(r.coefficient_of(v, 2).constant_term(), r.coefficient_of(v, 1).constant_term(),
                                        r.coefficient_of(v, 0).constant_term());
        if (roots.empty()) inconsistent(rel.name);
        if (roots.size() == 1) {
          values[v] = roots[0];
          progress = true;
        }
        continue;
      }
      // Sign argument with all unknowns >= 0.
      if (r.total_degree() == 1) {
        const Rat c = r.constant_term();
        bool all_pos = true, all_neg = true;
        for (const auto& [e, coef] : r.terms()) {
          if (total_degree(e) == 0) continue;
          all_pos = all_pos && coef.sign() > 0;
          all_neg = all_neg && coef.sign() < 0;
        }
        if ((all_pos && c.sign() > 0) || (all_neg && c.sign() < 0)) inconsistent(rel.name);
      }
    }
  }
  std::vector<Int> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) throw CurveError(ErrorKind::Underdetermined, "character " + (*vars)[i] + " is not determined");
    out.push_back(*values[i]);
  }
  return out;
}

}  // namespace curvekit
