#pragma once

#include <array>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "curvekit/forms.hpp"
#include "curvekit/numeric.hpp"
#include "curvekit/random.hpp"
#include "curvekit/upoly.hpp"

namespace curvekit {

// Raised inside residue-ring computations when an element turns out to be a
// zero divisor; carries a proper monic factor of the modulus.
struct ZeroDivisor {
  QPoly factor;
};

// The ring Q[x]/(q) for a monic squarefree q. Zero tests and inversions that
// would give different answers at different roots of q throw ZeroDivisor, so
// callers can split q and retry on each factor.
class ResidueRing {
 public:
  explicit ResidueRing(QPoly modulus);

  const QPoly& modulus() const { return q_; }
  int degree() const { return q_.degree(); }

  QPoly reduce(const QPoly& a) const { return a.degree() < q_.degree() ? a : a % q_; }
  QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(a * b); }
  QPoly inv(const QPoly& a) const;
  bool is_zero(const QPoly& a) const;
  QPoly div(const QPoly& a, const QPoly& b) const { return mul(a, inv(b)); }

 private:
  QPoly q_;
};

// Runs fn over Q[x]/(q), splitting the modulus whenever fn hits a zero
// divisor. Returns the pieces of q with the corresponding results.
template <class R, class Fn>
std::vector<std::pair<QPoly, R>> split_apply(const QPoly& q, Fn&& fn) {
  std::vector<std::pair<QPoly, R>> out;
  std::deque<QPoly> work{monic(q)};
  while (!work.empty()) {
    QPoly m = std::move(work.front());
    work.pop_front();
    try {
      const ResidueRing ring(m);
      out.emplace_back(m, fn(ring));
    } catch (const ZeroDivisor& z) {
      QPoly a = monic(z.factor);
      QPoly b = exact_div(m, a);
      work.push_front(std::move(b));
      work.push_front(std::move(a));
    }
  }
  return out;
}

// Polynomials over a residue ring, coefficients from the constant term up.
using KPoly = std::vector<QPoly>;

void ktrim(const ResidueRing& k, KPoly& a);
KPoly kadd(const ResidueRing& k, const KPoly& a, const KPoly& b);
KPoly ksub(const ResidueRing& k, const KPoly& a, const KPoly& b);
KPoly kmul(const ResidueRing& k, const KPoly& a, const KPoly& b);
KPoly kscale(const ResidueRing& k, const QPoly& s, const KPoly& a);
KPoly kmonic(const ResidueRing& k, KPoly a);
KPoly krem(const ResidueRing& k, KPoly a, KPoly b);
KPoly kquo(const ResidueRing& k, KPoly a, KPoly b);
KPoly kgcd(const ResidueRing& k, KPoly a, KPoly b);
KPoly kderivative(const ResidueRing& k, const KPoly& a);
QPoly keval(const ResidueRing& k, const KPoly& a, const QPoly& x);
// Squarefree decomposition over the residue ring (Yun).
std::vector<std::pair<KPoly, int>> ksquarefree(const ResidueRing& k, const KPoly& f);
// Order of vanishing at 0 (index of the first nonzero coefficient).
int kvaluation(const ResidueRing& k, const KPoly& a);

// Value of a polynomial at a point whose coordinates live in the ring.
QPoly eval_at(const ResidueRing& k, const MultiPoly& f, const std::vector<QPoly>& point);

// A Galois-stable set of points of the plane: the roots theta of minpoly give
// the points (coords[0](theta) : coords[1](theta) : coords[2](theta)).
struct PointBlock {
  QPoly minpoly;
  std::array<QPoly, 3> coords;
  int multiplicity = 1;

  int degree() const { return minpoly.degree(); }
  bool is_rational() const { return minpoly.degree() == 1; }
  ProjPoint point() const;
  PointBlock restrict_to(const QPoly& factor) const;
  std::vector<QPoly> coord_vector() const { return {coords[0], coords[1], coords[2]}; }
};

PointBlock rational_block(const ProjPoint& p, int multiplicity = 1);

// All intersection points of two plane curves without common component, with
// exact local intersection multiplicities (sum = product of degrees).
// Throws CommonComponent (message carries the common factor) or
// ShearExhausted.
std::vector<PointBlock> solve_pair(const MultiPoly& f, const MultiPoly& g, Rng& rng);
// Splits rational points off every block.
std::vector<PointBlock> split_rational(const std::vector<PointBlock>& blocks);
// Greatest common divisor of two ternary forms (primitive integer).
MultiPoly ternary_gcd(const MultiPoly& f, const MultiPoly& g, Rng& rng);

struct NumericPoint {
  std::array<Complex, 3> coords;  // scaled so the largest coordinate is 1
  Real error;                     // bound on each coordinate's error
};
std::vector<NumericPoint> numeric_points(const PointBlock& block, unsigned bits);

}  // namespace curvekit
