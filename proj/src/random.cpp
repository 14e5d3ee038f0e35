#include "curvekit/random.hpp"

namespace curvekit {

RatMatrix random_invertible(Rng& rng, int size, long bound) {
  RatMatrix m(size, size);
  do {
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m(i, j) = rng.integer(bound);
  } while (determinant(m).is_zero());
  return m;
}

}  // namespace curvekit
