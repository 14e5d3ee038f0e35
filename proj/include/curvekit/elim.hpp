#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "curvekit/algebra.hpp"
#include "curvekit/forms.hpp"
#include "curvekit/multipoly.hpp"
#include "curvekit/numeric.hpp"
#include "curvekit/random.hpp"

namespace curvekit {

// Sylvester matrix of f and g viewed as polynomials in variable v: the first
// deg_v(g) rows carry the coefficients of f, shifted one column per row,
// followed by deg_v(f) rows for g.
struct SylvesterMatrix {
  int m = 0;
  int n = 0;
  std::vector<std::vector<MultiPoly>> entries;
};

SylvesterMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::size_t v);
// Determinant of the Sylvester matrix. Throws DegreeZero when either input
// has degree zero in v.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t v);
// (-1)^(n(n-1)/2) Res(f, f') / lc(f) with respect to v.
MultiPoly discriminant(const MultiPoly& f, std::size_t v);

// Conversion between MultiPoly in one variable and dense polynomials.
QPoly to_qpoly(const MultiPoly& f, std::size_t v);
MultiPoly from_qpoly(const QPoly& p, const VarList& vars, std::size_t v);

struct RootSet {
  struct Located {
    Complex z;
    Real error;
    int multiplicity;
  };
  std::vector<std::pair<Rat, int>> rational;
  std::map<int, int> nonrational_count_by_multiplicity;
  std::vector<Located> numeric;
  // Roots at infinity of a projective parameter.
  int infinity_multiplicity = 0;

  int total() const;
  int distinct() const;
};

// Splits rational roots off exactly; the rest are located numerically with
// error at most 2^-bits relative (skipped when bits == 0).
RootSet locate_roots(const QPoly& f, unsigned bits = 53);

// Resultant of three ternary forms, up to a fixed nonzero factor that depends
// only on the degrees and on the coordinate change `frame`. Returns nullopt
// when the frame is not generic for these forms.
std::optional<Rat> ternary_resultant(const MultiPoly& f0, const MultiPoly& f1, const MultiPoly& f2,
                                     const RatMatrix& frame, Rng& rng);

// Resultant of two binary forms given by coefficient vectors (highest power
// of the first variable first).
Rat binary_resultant(const std::vector<Rat>& a, const std::vector<Rat>& b);

// Largest factor of f occurring with multiplicity > 1, or nullopt when f is
// squarefree.
std::optional<MultiPoly> repeated_factor(const MultiPoly& f, Rng& rng);
MultiPoly gcd_of(const std::vector<MultiPoly>& polys, Rng& rng);

struct SingularityWitness {
  bool singular = false;
  RatMatrix frame;               // coordinate change used for the projection
  QPoly x_polynomial;            // singular-locus x-coordinates in that frame
  RootSet x_roots;
  std::vector<PointBlock> points;  // singular points in original coordinates
};

// Decides whether the three partials of f have a common zero. Throws
// NotACurve naming the repeated factor when f is not squarefree.
SingularityWitness curve_is_singular(const TernaryForm& f, Rng& rng);

struct PencilDiscriminant {
  QPoly delta;           // polynomial in lambda, primitive integer
  int expected_degree;   // 3(n-1)^2
  RootSet roots;         // includes the multiplicity at lambda = infinity
};

// Discriminant of the members f + lambda g.
PencilDiscriminant pencil_singular_members(const TernaryForm& f, const TernaryForm& g, Rng& rng,
                                           unsigned bits = 53);

}  // namespace curvekit
