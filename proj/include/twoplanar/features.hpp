// Feature positions read off a parser configuration.
//
// 2-Planar (17 slots):
//   0-2   active stack, top first
//   3-4   inactive stack, top first
//   5     buffer front
//   6-15  leftmost, rightmost modifier of each of the 5 stack words
//   16    leftmost modifier of the buffer front
//
// Arc-hybrid+Swap (11 slots):
//   0-2   stack, top first
//   3     buffer front
//   4-9   leftmost, rightmost modifier of each stack word
//   10    leftmost modifier of the buffer front
//
// Empty positions hold kNullSlot.
#pragma once

#include <vector>

#include "twoplanar/arc_hybrid.hpp"
#include "twoplanar/graph.hpp"
#include "twoplanar/transition.hpp"
#include "twoplanar/transition_system.hpp"

namespace twoplanar {

inline constexpr int kNullSlot = -1;

int feature_arity(System s);

struct FeatureView {
  std::vector<int> slots;  // node indices or kNullSlot
};

// Leftmost and rightmost dependent of every node among the arcs added so
// far, kept up to date one arc at a time.
class Modifiers {
 public:
  Modifiers() = default;
  explicit Modifiers(int n);
  static Modifiers from_arcs(const ArcSet& arcs);

  void add(const Arc& a);
  int leftmost(int node) const { return node < 0 ? kNullSlot : left_[static_cast<size_t>(node)]; }
  int rightmost(int node) const { return node < 0 ? kNullSlot : right_[static_cast<size_t>(node)]; }

  bool operator==(const Modifiers&) const = default;

 private:
  std::vector<int> left_, right_;
};

FeatureView extract_features(const Configuration& c, const Modifiers& mods);
FeatureView extract_features(const HybridConfiguration& c, const Modifiers& mods);

}  // namespace twoplanar
