#pragma once

#include <cstdint>
#include <random>

#include "curvekit/linalg.hpp"
#include "curvekit/rat.hpp"

namespace curvekit {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Seeded generator with a platform-independent mapping to integers, so that
// identical seeds give identical choices everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : g_(seed) {}

  std::uint64_t next() { return g_(); }
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(g_() % span);
  }
  Rat integer(long bound) { return Rat(uniform(-bound, bound)); }
  Rng fork() { return Rng(g_()); }

 private:
  std::mt19937_64 g_;
};

// Random invertible integer matrix with entries in [-bound, bound].
RatMatrix random_invertible(Rng& rng, int size, long bound);

}  // namespace curvekit
