#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "curvekit/rat.hpp"
#include "curvekit/upoly.hpp"

namespace Eigen {

template <>
struct NumTraits<curvekit::Rat> : GenericNumTraits<curvekit::Rat> {
  using Real = curvekit::Rat;
  using NonInteger = curvekit::Rat;
  using Literal = curvekit::Rat;
  using Nested = curvekit::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace curvekit {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMatrix3 = Eigen::Matrix<Rat, 3, 3>;
using RatVector3 = Eigen::Matrix<Rat, 3, 1>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m);
int rank(RatMatrix m);
// Basis of the right kernel, one column per basis vector.
RatMatrix nullspace(RatMatrix m);
// A particular solution of a x = b, or nullopt when inconsistent. Free
// variables are set to zero.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);
Rat determinant(const RatMatrix& m);
std::optional<RatMatrix3> inverse(const RatMatrix3& m);

// Stacks rows into a matrix with the given column count.
RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows, int cols);

inline Rat ring_exact_div(const Rat& a, const Rat& b) { return a / b; }
inline QPoly ring_exact_div(const QPoly& a, const QPoly& b) { return exact_div(a, b); }

// Fraction-free elimination (Bareiss). Works over any exact integral domain
// with an exact division found by argument-dependent lookup.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(Rat(1));
  R prev(Rat(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(m[piv][k])) ++piv;
      if (piv == n) return R();
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = ring_exact_div(t, prev);
      }
      m[i][k] = R();
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? R(-det) : det;
}

}  // namespace curvekit
