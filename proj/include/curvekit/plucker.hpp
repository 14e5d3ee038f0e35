#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvekit/characters.hpp"
#include "curvekit/local.hpp"

namespace curvekit {

// Order n, class nu, nodes d, cusps kappa, bitangents delta, flexes rho, genus p.
struct PluckerChars {
  std::optional<long> n, nu, d, kappa, delta, rho, p;

  bool complete() const { return n && nu && d && kappa && delta && rho && p; }
};

const std::vector<CharacterRelation>& plucker_relations();
VarList plucker_vars();
// Throws Underdetermined or Inconsistent (naming the violated relation).
PluckerChars plucker_solve(const PluckerChars& partial);
// Names of the relations violated by a record (empty when consistent).
std::vector<std::string> plucker_violations(const PluckerChars& c);
PluckerChars dual_chars(const PluckerChars& c);

// x0 f_x + y0 f_y + z0 f_z. Throws ZeroPolar.
TernaryForm first_polar(const TernaryForm& f, const ProjPoint& p);

struct NodeCuspCount {
  long nodes = 0;
  long cusps = 0;
};
// Counts nodes and simple cusps; throws UnsupportedSingularity otherwise.
NodeCuspCount node_cusp_count(const TernaryForm& f, Rng& rng);
PluckerChars curve_characters(const TernaryForm& f, Rng& rng);
long curve_class(const TernaryForm& f, Rng& rng);
long flex_count(const TernaryForm& f, Rng& rng);

struct Hessian {
  MultiPoly poly;   // degree 3(n-2); a constant for conics
  bool constant = false;
};
Hessian hessian(const TernaryForm& f);

struct Flex {
  PointBlock block;
  std::optional<ProjPoint> point;
  std::vector<NumericPoint> numeric;
  int weight = 1;    // contribution to the flex count per point
  int contact = 3;   // contact order of the tangent (0 at singular points)
  bool at_singular_point = false;

  int count() const { return block.degree(); }
};
std::vector<Flex> flexes(const TernaryForm& f, Rng& rng, unsigned bits = 53);
int flex_total(const std::vector<Flex>& fl);

// Dual curve in line coordinates (u, v, w), of degree equal to the class.
TernaryForm dual_curve(const TernaryForm& f, Rng& rng);

// Forms D of degree e with D(images) divisible by f, as a basis of the kernel.
std::vector<MultiPoly> implicitize(const MultiPoly& f, const std::vector<MultiPoly>& images, int e, Rng& rng,
                                   const VarList& target);

struct FlexLine {
  std::array<Complex, 3> coeffs;   // normalized, largest entry 1
  std::optional<TernaryForm> exact;
  std::array<int, 3> flexes;       // indices into the flex list
  int triangle = -1;               // index of the quartic root
};

struct CubicFlexPencil {
  QPoly discriminant;               // in lambda
  int discriminant_degree = 12;     // counting lambda = infinity
  MultiPoly quartic;                // binary form in (lambda, mu), cube divides the discriminant
  RootSet quartic_roots;
  std::vector<std::optional<TernaryForm>> triangles;  // exact member when the root is rational
  std::vector<std::array<Complex, 3>> flex_points;    // the nine flexes
  std::vector<std::optional<ProjPoint>> exact_flexes;
  std::vector<FlexLine> lines;
  Real max_incidence_error;
  bool each_flex_on_four_lines = false;
};
CubicFlexPencil cubic_flex_pencil(const TernaryForm& f, Rng& rng, unsigned bits = 256);

}  // namespace curvekit
