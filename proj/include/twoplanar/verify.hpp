// Randomised checks of the oracles against exhaustive search, as run by
// `oracle-verify`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twoplanar/transition.hpp"

namespace twoplanar {

struct VerifyOptions {
  int max_len = 6;
  long samples = 10000;  // configurations to check
  std::uint64_t seed = 1;
};

struct VerifyReport {
  long trees = 0;
  long configurations = 0;
  long walks = 0;  // zero-cost reconstruction walks
  long mismatches = 0;
  // Trace of the first failure: the transitions leading to it, then a
  // description.
  std::vector<std::string> counterexample;

  bool ok() const { return mismatches == 0; }
};

// 2-Planar: along random legal walks over random trees, the loss equals the
// brute-force minimum and every transition cost equals the brute-force loss
// delta; zero-cost walks over random 2-planar trees rebuild the assigned
// gold planes.
VerifyReport verify_twoplanar(const VerifyOptions& opts);

// Arc-hybrid+Swap: on projective trees, costs along swap-free walks equal
// brute-force loss deltas; zero-cost walks over random trees rebuild them.
VerifyReport verify_hybrid(const VerifyOptions& opts);

VerifyReport verify_oracle(System system, const VerifyOptions& opts);

}  // namespace twoplanar
