#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curvekit/cremona.hpp"
#include "curvekit/linsys.hpp"

namespace curvekit {

// Number of absolutely irreducible factors of a squarefree form, from the
// dimension of the closed logarithmic differentials it admits.
int absolute_factor_count(const TernaryForm& f, Rng& rng);
// Throws Reducible, naming a factor over Q when one exists.
void require_irreducible(const TernaryForm& f, Rng& rng);

struct GenusReport {
  int m = 0;
  std::vector<std::pair<int, long>> ordinary_contributions;  // (multiplicity, number of points)
  long simple_cusps = 0;                                     // each counted as one double point
  long p = 0;
  int resolution_steps = 0;
  std::optional<TernaryForm> model;  // ordinary model when resolution was needed
};
GenusReport genus(const TernaryForm& f, Rng& rng);

// Genus from the singularities directly; requires ordinary points or simple cusps.
std::optional<long> ordinary_genus(const TernaryForm& f, Rng& rng, GenusReport* report = nullptr);

// Adjoints of degree k: multiplicity alpha - 1 at each alpha-fold point.
LinearSystemReport adjoint_system(const TernaryForm& f, int k, Rng& rng);

struct SeriesDescriptor {
  long order = 0;
  long dimension = 0;
  std::optional<long> speciality_index;
  std::optional<bool> complete;
};

// Throws AllMembersContainCurve.
SeriesDescriptor cut_series(const TernaryForm& f, const LinearSystemReport& system, Rng& rng);

struct CanonicalReport {
  SeriesDescriptor series;
  long p = 0;
  long epsilon = 0;  // p - 1 minus the measured dimension
  TernaryForm model;
};
// Throws NoCanonical when p = 0.
CanonicalReport canonical_series(const TernaryForm& f, Rng& rng);

// (n_i, r_i) = (2p - 2 + m i, p - 2 + m i) for i >= 3.
std::pair<long, long> series_formulas(long m, long p, long i);

struct GroupPoint {
  ProjPoint point;
  int multiplicity = 1;
};
// Independent conditions a group imposes on the adjoints of degree m - 3.
// Throws GroupOffCurve.
long riemann_roch_conditions(const TernaryForm& f, const std::vector<GroupPoint>& group, Rng& rng);

long pencil_double_points(long n, long p);
long series_multiple_points(long r, long n, long p);

enum class ProjectionVerdict { Projection, NotProjection };
std::string to_string(ProjectionVerdict v);
struct ProjectionReport {
  ProjectionVerdict verdict = ProjectionVerdict::NotProjection;
  long n = 0;
  long p = 0;
  std::optional<LinearSystemReport> adjoints;  // degree n - 4, when consulted
};
ProjectionReport projection_completeness_test(const TernaryForm& f, Rng& rng);

}  // namespace curvekit
