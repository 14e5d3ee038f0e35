#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvekit/characters.hpp"
#include "curvekit/forms.hpp"
#include "curvekit/random.hpp"

namespace curvekit {

// Characters of a space curve: order n, rank r, class nu, apparent double
// points d, stationary points K, stationary planes chi, and the line counts
// t, tau, delta of its plane sections and projections.
struct CayleyChars {
  std::optional<long> n, r, nu, d, delta, t, tau, K, chi, p;
  bool complete() const { return n && r && nu && d && delta && t && tau && K && chi && p; }
};

VarList cayley_vars();
const std::vector<CharacterRelation>& cayley_relations();

// K defaults to 0 when absent. Throws Underdetermined or Inconsistent.
CayleyChars cayley_complete(const CayleyChars& known);
std::vector<std::string> cayley_violations(const CayleyChars& c);

// Smooth complete intersection of surfaces of degrees mu and nu. When one
// surface is a plane only n, r, d, K and p are filled in.
CayleyChars ci_characters(long mu, long nu);
long ci_genus(long mu, long nu);

struct LinkageInput {
  long mu = 0, nu = 0;
  long n1 = 0;
  std::optional<long> p1;
  std::optional<long> i;
};
struct LinkageResult {
  long i = 0;
  long n2 = 0;
  long p1 = 0;
  long p2 = 0;
  long p_total = 0;
};
// Throws InconsistentLinkage.
LinkageResult linked_characters(const LinkageInput& in);

using SpacePoint = std::array<Rat, 4>;

struct SpaceProjection {
  TernaryForm curve;
  bool center_on_curve = false;
  RatMatrix frame;  // columns: three coordinate directions, then the center
};
// Plane curve cut out by the cone over f = g = 0 from the center. Throws
// CenterDegenerate.
SpaceProjection project_ci(const QuaternaryForm& f, const QuaternaryForm& g, const SpacePoint& center);

struct Postulation {
  long value = 0;
  bool below_threshold = false;    // m < n - 2
  bool meets_sharper_bound = false;  // 2m >= n - 3
};
Postulation postulation(long n, long p, long m);

// Rank of the restriction of degree-m forms in four variables to the curve
// (s:t) -> (f0 : f1 : f2 : f3). Throws DegenerateParametrization.
long postulation_rank(const std::vector<BinaryForm>& param, int m);

long castelnuovo_bound(long n);
long quadric_bidegree_genus(long n, long mu);

// Throws OutOfRegime.
long moduli_count(long n, long p);

}  // namespace curvekit
