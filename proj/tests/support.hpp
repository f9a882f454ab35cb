#pragma once

#include <random>

#include "cruv/numfield.hpp"

namespace cruv::testing {

inline RealAlg random_real(std::mt19937& rng, unsigned mask = 0xF, int terms = 3) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  std::uniform_int_distribution<unsigned> pick(0, 15);
  RealAlg r;
  for (int k = 0; k < terms; ++k) {
    unsigned m = pick(rng) & mask;
    Q q(num(rng), den(rng));
    q.canonicalize();
    r += RealAlg::basis(m, q);
  }
  return r;
}

inline RealAlg random_nonzero(std::mt19937& rng, unsigned mask = 0xF) {
  RealAlg r;
  while (r.is_zero()) r = random_real(rng, mask);
  return r;
}

inline CxAlg random_cx(std::mt19937& rng, unsigned mask = 0xF) {
  return {random_real(rng, mask, 2), random_real(rng, mask, 2)};
}

}  // namespace cruv::testing
