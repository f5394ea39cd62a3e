// Plane assignment, static oracle and dynamic oracle for the 2-Planar system.
//
// The dynamic oracle is defined against a fixed canonical assignment of gold
// arcs to planes (the one produced by the static oracle). The loss of a
// configuration is
//
//   |U_1 u U_2| + cycles(A u I_1 u I_2)
//
// where U_i are the gold arcs of plane i that can no longer be built in that
// plane and I_i the rest. Building a correct arc in the wrong plane counts as
// an error.
#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "twoplanar/graph.hpp"
#include "twoplanar/transition_system.hpp"

namespace twoplanar {

class PlaneAssignment {
 public:
  PlaneAssignment() = default;
  // plane_of_dep[d] is 0/1 for the plane of the gold arc into d, -1 if the
  // arc is discarded. gold_heads[0] is ignored.
  PlaneAssignment(std::vector<int> gold_heads, std::vector<int> plane_of_dep);

  int sentence_length() const { return static_cast<int>(heads_.size()) - 1; }
  int gold_head(int dep) const { return heads_[static_cast<size_t>(dep)]; }
  // -1 when dep has no gold arc or the arc was discarded.
  int plane(int dep) const { return plane_[static_cast<size_t>(dep)]; }
  const std::vector<int>& children(int head) const { return children_[static_cast<size_t>(head)]; }
  const std::vector<std::vector<int>>& children_lists() const { return children_; }

  ArcSet plane_arcs(int plane) const;
  ArcSet discarded() const;
  int assigned_count() const;

  const std::vector<int>& gold_heads() const { return heads_; }
  const std::vector<int>& planes() const { return plane_; }

 private:
  std::vector<int> heads_;
  std::vector<int> plane_;
  std::vector<std::vector<int>> children_;
};

// total = |unreachable[0]| + |unreachable[1]| + cycle_count
//         + forced_move_penalty.
// The penalty is nonzero only right after a Switch: the next transition
// cannot be another Switch, and the penalty is the extra loss of the best
// transition still allowed.
struct LossBreakdown {
  std::vector<Arc> unreachable[2];
  int cycle_count = 0;
  int forced_move_penalty = 0;
  int total = 0;
};

struct TransitionCosts {
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  std::vector<Transition> transitions;  // legal kinds, unlabeled
  std::vector<int> costs;               // parallel to transitions
  std::vector<Transition> zero_cost;

  std::optional<int> cost(Kind k) const;
  bool is_zero_cost(Kind k) const;
};

// Runs the static oracle over the gold tree, deciding planes on the fly: an
// arc goes to the active plane whenever it can be built there, which fixes
// the plane of every arc it (transitively) crosses. Gold arcs the
// simulation cannot build are discarded.
PlaneAssignment assign_planes(const DepGraph& gold);

// Next transition of the canonical derivation. Arc transitions are
// unlabeled. Throws std::logic_error on a terminal configuration.
Transition static_oracle(const Configuration& c, const PlaneAssignment& pa);

std::vector<Arc> unreachable_set(const Configuration& c, const PlaneAssignment& pa, int plane);

LossBreakdown loss(const Configuration& c, const PlaneAssignment& pa);

// Loss delta of every legal transition. Switch is charged the best delta
// over the non-Switch transitions that must follow it. The zero-cost set is
// regularized.
TransitionCosts transition_costs(const Configuration& c, const PlaneAssignment& pa);

// Drops Switch from the zero-cost set when a non-Switch transition is also
// zero-cost.
TransitionCosts regularize(const Configuration& c, TransitionCosts costs);

}  // namespace twoplanar
