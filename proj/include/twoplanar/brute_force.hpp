// Exhaustive minimum-loss search used to check the oracles.
//
// Both searches enumerate every legal transition sequence to a terminal
// configuration with their own compact state and transition rules (cycle
// checks walk head pointers instead of using union-find), memoised per gold
// tree.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "twoplanar/arc_hybrid.hpp"
#include "twoplanar/oracle.hpp"
#include "twoplanar/transition_system.hpp"

namespace twoplanar {

inline constexpr int kDefaultBruteForceBound = 6;
// Largest sentence the 64-bit 2-Planar state key can hold.
inline constexpr int kBruteForceHardLimit = 7;

// Memo table; valid for one plane assignment (or one gold tree for the
// hybrid search). Reusing it across configurations of the same sentence
// avoids re-exploring shared suffixes.
class BruteForceCache {
 public:
  void clear() { table_.clear(); }
  size_t size() const { return table_.size(); }

 private:
  friend int brute_force_min_loss(const Configuration&, const PlaneAssignment&, BruteForceCache*, int);
  friend int hybrid_brute_force_min_loss(const HybridConfiguration&, const DepGraph&, bool, BruteForceCache*, int);
  std::unordered_map<std::uint64_t, int> table_;
  std::unordered_map<std::string, int> string_table_;
};

// Minimum over all completions of c (consecutive Switch banned) of the
// number of assigned gold arcs missing from the final arc set or built in
// the wrong plane. Throws std::invalid_argument if the sentence is longer
// than max_len.
int brute_force_min_loss(const Configuration& c, const PlaneAssignment& pa, BruteForceCache* cache = nullptr,
                         int max_len = kDefaultBruteForceBound);

// Minimum Hamming loss over all completions of an arc-hybrid configuration.
// With allow_swap = false only Shift / Left-Arc / Right-Arc are explored.
int hybrid_brute_force_min_loss(const HybridConfiguration& c, const DepGraph& gold, bool allow_swap,
                                BruteForceCache* cache = nullptr, int max_len = kDefaultBruteForceBound);

}  // namespace twoplanar
