#pragma once

#include <array>
#include <vector>

#include "curvekit/local.hpp"

namespace curvekit {

// Triangle of reference: from_standard has the three vertices as columns,
// so X = from_standard * X' carries (1:0:0), (0:1:0), (0:0:1) to them.
struct QuadraticFrame {
  std::array<ProjPoint, 3> triangle;
  RatMatrix3 from_standard;
  RatMatrix3 to_standard;
};

// Throws TriangleDegenerate for collinear vertices.
QuadraticFrame make_frame(const std::array<ProjPoint, 3>& triangle);

struct ResolutionStep {
  QuadraticFrame frame;
  TernaryForm before;
  TernaryForm after;  // in the standard coordinates of the frame
  std::array<int, 3> multiplicities{};        // of `before` at the vertices
  std::array<int, 3> after_multiplicities{};  // of `after` at the vertices
  // deg(after) = 2n - a - b - c and a' = n - b - c, b' = n - a - c, c' = n - a - b
  bool law_holds = false;
};

// Applies (x:y:z) -> (yz:xz:xy) in the frame and strips the exceptional
// lines. Throws EdgeComponent when a side of the triangle lies on f.
ResolutionStep std_quadratic_transform(const TernaryForm& f, const QuadraticFrame& frame);

// Both homaloidal identities: sum a^2 = n^2 - 1 and sum a(a+1)/2 = n(n+3)/2 - 2.
bool homaloidal_check(int n, const std::vector<int>& multiplicities);

struct NetImage {
  TernaryForm image;
  int order = 0;          // order of the series cut by the net, base points removed
  int map_degree = 1;
};
// Image of f under x' = L, y' = M, z' = N. Throws CollapsedImage when the map
// restricted to f is not birational onto its image.
NetImage net_image(const TernaryForm& f, const TernaryForm& l, const TernaryForm& m, const TernaryForm& n, Rng& rng);

struct Resolution {
  std::vector<ResolutionStep> steps;
  TernaryForm final_curve;
};

inline constexpr int kDefaultIterationCap = 16;

// Repeated quadratic transformations centered at non-ordinary singular points
// until only ordinary multiple points remain. Throws IterationCap or
// NonRationalCenter.
Resolution resolve(const TernaryForm& f, Rng& rng, int cap = kDefaultIterationCap);

bool is_ordinary(const SingularPoint& s);

}  // namespace curvekit
