#pragma once

#include <vector>

#include "curvekit/elim.hpp"
#include "curvekit/local.hpp"

namespace curvekit {

// Pass through a point (or a conjugate block of points) with multiplicity m.
struct LinearCondition {
  PointBlock point;
  int multiplicity = 1;

  LinearCondition(const ProjPoint& p, int m = 1) : point(rational_block(p)), multiplicity(m) {}  // NOLINT
  LinearCondition(PointBlock b, int m) : point(std::move(b)), multiplicity(m) {}
  // Rational equations imposed: deg(block) * m(m+1)/2.
  long equations() const { return static_cast<long>(point.degree()) * multiplicity * (multiplicity + 1) / 2; }
};

struct LinearSystemReport {
  int degree = 0;
  std::vector<LinearCondition> conditions;
  long virtual_dim = 0;
  long effective_dim = 0;  // -1 when no curve satisfies the conditions
  long superabundance = 0;
  std::vector<TernaryForm> basis;
};

// Rows are the linear equations on the coefficients of a degree-n form, one
// column per monomial in monomials_of_degree(3, n) order.
RatMatrix condition_matrix(int n, const std::vector<LinearCondition>& conditions);
LinearSystemReport system_dimension(int n, const std::vector<LinearCondition>& conditions);

// Throws DependentConditions when the eight points fail to impose independent
// conditions on cubics.
ProjPoint ninth_base_point(const std::vector<ProjPoint>& eight, Rng& rng);

struct NoetherDecomposition {
  std::optional<TernaryForm> a;  // degree n - p; empty when zero
  std::optional<TernaryForm> b;  // degree n - q; empty when zero
  long residual_freedom = 0;
};
// f = A phi + B psi. Throws HypothesisFailed naming the offending point, or
// NoSolution.
NoetherDecomposition noether_decompose(const TernaryForm& f, const TernaryForm& phi, const TernaryForm& psi, Rng& rng);
// Expands A phi + B psi.
MultiPoly noether_expand(const NoetherDecomposition& d, const TernaryForm& phi, const TernaryForm& psi);

struct Regularity {
  bool regular = false;
  long superabundance = 0;
};
// Degree-n curves through the pq transversal intersections of two curves of
// degrees p and q.
Regularity regularity_threshold(int p, int q, int n);

struct FixedPoints {
  int count = 0;
  int m = 0;
  int n = 0;
  QPoly diagonal;
  RootSet roots;
};
// Correspondence c(x, y) = 0 on a line with bidegree (deg_x c, deg_y c).
// Throws DiagonalContained.
FixedPoints chasles_fixed_points(const MultiPoly& corr, unsigned bits = 53);

struct DoublePoints {
  int count = 0;
  BinaryForm jacobian;
  RootSet roots;
};
// Double points of the involution cut by the pencil f + lambda phi.
// Throws ProportionalForms.
DoublePoints involution_double_points(const BinaryForm& f, const BinaryForm& phi, unsigned bits = 53);

}  // namespace curvekit
