#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvekit/algebra.hpp"
#include "curvekit/elim.hpp"
#include "curvekit/forms.hpp"

namespace curvekit {

// Local data of a curve at a point whose coordinates live in a residue ring.
struct LocalData {
  int multiplicity = 0;
  int pivot = 2;                // coordinate kept at one in the local chart
  KPoly cone;                   // tangent cone at t = 1, coefficient i of s^i t^(r-i)
  std::vector<int> profile;     // multiplicities of the distinct tangents, descending
  int contact = 0;              // contact order of the tangent when there is one tangent
};

// Throws ZeroDivisor when the answer differs between conjugate points.
LocalData local_data(const ResidueRing& k, const MultiPoly& f, const std::vector<QPoly>& point);
// Order of vanishing of f along the line p + u d at u = 0 (-1 if the line lies on f).
int line_contact(const ResidueRing& k, const MultiPoly& f, const std::vector<QPoly>& p, const std::vector<QPoly>& d);

struct TangentCone {
  BinaryForm form;
  std::vector<int> profile;
  int distinct() const { return static_cast<int>(profile.size()); }
};

// Chart variables at a point: the two coordinates other than the pivot.
VarList chart_vars(int pivot);
int chart_pivot(const ProjPoint& p);

int multiplicity_at(const TernaryForm& f, const ProjPoint& p);
TangentCone tangent_cone(const TernaryForm& f, const ProjPoint& p);
// x f_x(P) + y f_y(P) + z f_z(P); requires a smooth point.
TernaryForm tangent_line(const TernaryForm& f, const ProjPoint& p);

enum class SingularKind { Node, Cusp, OrdinaryRFold, NonOrdinary };
std::string to_string(SingularKind k);

struct SingularPoint {
  PointBlock block;                         // one point when block.degree() == 1
  std::optional<ProjPoint> point;
  std::vector<NumericPoint> numeric;        // locations of the conjugates
  int multiplicity = 0;
  std::optional<BinaryForm> tangent_cone;   // exact, for rational points
  std::vector<int> profile;
  int distinct_tangents = 0;
  SingularKind kind = SingularKind::NonOrdinary;
  int contact = 0;  // contact of the unique tangent for double points with one tangent

  int count() const { return block.degree(); }
  // Node or cusp whose tangent meets the curve with contact exactly three.
  bool is_simple() const {
    return kind == SingularKind::Node || (kind == SingularKind::Cusp && contact == 3);
  }
};

// All singular points, grouped in conjugate blocks. Throws NotSquarefree.
std::vector<SingularPoint> classify_singularities(const TernaryForm& f, Rng& rng, unsigned bits = 53);

MultiPoly hessian_determinant(const MultiPoly& f);
// Throws SingularPoint when p is a multiple point; DomainError when p is not on f.
bool is_flex(const TernaryForm& f, const ProjPoint& p);

struct IntersectionRecord {
  PointBlock block;
  std::optional<ProjPoint> point;
  std::vector<NumericPoint> numeric;
  int local_multiplicity = 0;

  int count() const { return block.degree(); }
};

std::vector<IntersectionRecord> intersect(const TernaryForm& f, const TernaryForm& g, Rng& rng, unsigned bits = 53);
int intersection_multiplicity(const TernaryForm& f, const TernaryForm& g, const ProjPoint& p, Rng& rng);
int bezout_total(const std::vector<IntersectionRecord>& records);

}  // namespace curvekit
