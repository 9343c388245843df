#pragma once

#include <cstdint>

#include "qsplit/presentation.hpp"

namespace qsplit {

struct FuzzLimits {
  int max_vertices = 6;
  int max_arrows = 10;
};

// Deterministic generator of random monomial special multiserial
// presentations: a random quiver, a partial injective successor map between
// composable arrows (which enforces the one-in/one-out condition), monomial
// relations for every non-chosen composable pair, rotation relations that cut
// every cycle of chosen successors, and a few extra monomial relations along
// the surviving chains. The output always passes is_special_multiserial; the
// same seed always yields byte-identical output.
Presentation fuzz_presentation(uint64_t seed, const FuzzLimits& limits = {});

// Hand-rolled generator so streams never depend on the standard library's
// distribution details.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  // Uniform value in [0, n); n must be positive.
  uint64_t below(uint64_t n);
};

}  // namespace qsplit
