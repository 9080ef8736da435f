#pragma once

#include "h2sl2/mat2.hpp"

#include <random>

namespace testutil {

using h2sl2::Int;
using h2sl2::Mat2;
using h2sl2::Rat;

inline Rat random_rat(std::mt19937& rng, long lo = -20, long hi = 20) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 20);
  return h2sl2::rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937& rng, long lo = -20, long hi = 20) {
  for (;;) {
    Rat r = random_rat(rng, lo, hi);
    if (r != 0) return r;
  }
}

// Random element of SL2(Q) as a short product of elementary and diagonal
// matrices (denominators stay desk-scale).
inline Mat2 random_sl2(std::mt19937& rng, int factors = 4) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<long> small(1, 6);
  Mat2 m;
  for (int i = 0; i < factors; ++i) {
    Rat t = random_nonzero_rat(rng, -6, 6);
    switch (pick(rng)) {
      case 0: m = m * h2sl2::E12(t); break;
      case 1: m = m * h2sl2::E21(t); break;
      default: m = m * h2sl2::D(h2sl2::rat(small(rng))); break;
    }
  }
  return m;
}

}  // namespace testutil
