// Arc-hybrid transition system extended with Swap, and its static-dynamic
// oracle: Swap is decided statically from the projective order of the gold
// tree, the other transitions get dynamic costs.
//
//   Shift      pushes the buffer front onto the stack.
//   Left-Arc   adds (buffer front -> stack top) and pops the stack.
//   Right-Arc  adds (second stack item -> stack top) and pops the stack.
//   Swap       moves the stack top back into the buffer, behind the front.
//              Legal only when 0 < top < front in surface order.
//
// Node 0 enters the buffer first, like the 2-Planar system. Parsing ends with
// an empty buffer and only node 0 on the stack.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "twoplanar/graph.hpp"
#include "twoplanar/oracle.hpp"
#include "twoplanar/transition.hpp"

namespace twoplanar {

class HybridConfiguration {
 public:
  static HybridConfiguration initial(int n);

  int sentence_length() const { return n_; }
  const std::vector<int>& stack() const { return stack_; }
  // Buffer in reading order (front first). O(size); use buffer_front() in
  // hot paths.
  std::vector<int> buffer() const { return {buffer_rev_.rbegin(), buffer_rev_.rend()}; }
  int buffer_size() const { return static_cast<int>(buffer_rev_.size()); }
  bool buffer_empty() const { return buffer_rev_.empty(); }
  int buffer_front() const { return buffer_rev_.back(); }
  const std::vector<int>& buffer_reversed() const { return buffer_rev_; }

  const ArcSet& arcs() const { return arcs_; }
  int label_of(int dep) const { return label_[static_cast<size_t>(dep)]; }
  int swaps() const { return swaps_; }

  bool is_terminal() const { return buffer_rev_.empty() && stack_.size() <= 1; }
  void apply_in_place(const Transition& t);

  bool operator==(const HybridConfiguration&) const = default;

 private:
  int n_ = 0;
  std::vector<int> stack_;
  std::vector<int> buffer_rev_;  // back() is the front of the buffer
  ArcSet arcs_;
  std::vector<int> label_;
  int swaps_ = 0;
};

HybridConfiguration hybrid_initial(int n);
std::vector<Transition> hybrid_legal(const HybridConfiguration& c);
bool hybrid_is_legal(const HybridConfiguration& c, const Transition& t);
HybridConfiguration hybrid_apply(const HybridConfiguration& c, const Transition& t);
DepGraph hybrid_extract_parse(const HybridConfiguration& c, std::span<const std::string> label_names = {});

// rank[node] = position of node in the in-order traversal of the gold tree
// (left dependents, head, right dependents, each side in surface order).
using ProjectiveOrder = std::vector<int>;
ProjectiveOrder projective_order(const DepGraph& gold);

// Static Swap when legal and the top belongs after the front in projective
// order; otherwise dynamic costs for Shift / Left-Arc / Right-Arc. When a
// later buffer node precedes the front in projective order the front is only
// passing through (it will be swapped back), so Shift is the sole zero-cost
// move.
TransitionCosts hybrid_oracle(const HybridConfiguration& c, const DepGraph& gold, const ProjectiveOrder& po);

// One canonical transition: the first zero-cost one in the order Swap,
// Left-Arc, Right-Arc, Shift. Unlabeled.
Transition hybrid_static_oracle(const HybridConfiguration& c, const DepGraph& gold, const ProjectiveOrder& po);

}  // namespace twoplanar
