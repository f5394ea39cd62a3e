#include "twoplanar/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace twoplanar {

PlaneAssignment::PlaneAssignment(std::vector<int> gold_heads, std::vector<int> plane_of_dep)
    : heads_(std::move(gold_heads)), plane_(std::move(plane_of_dep)), children_(heads_.size()) {
  if (heads_.size() != plane_.size()) throw std::invalid_argument("PlaneAssignment: size mismatch");
  heads_[0] = -1;
  plane_[0] = -1;
  for (size_t d = 1; d < heads_.size(); ++d)
    if (heads_[d] >= 0) children_[static_cast<size_t>(heads_[d])].push_back(static_cast<int>(d));
}

ArcSet PlaneAssignment::plane_arcs(int p) const {
  ArcSet out(sentence_length());
  for (int d = 1; d <= sentence_length(); ++d)
    if (plane(d) == p) out.add({gold_head(d), d});
  return out;
}

ArcSet PlaneAssignment::discarded() const {
  ArcSet out(sentence_length());
  for (int d = 1; d <= sentence_length(); ++d)
    if (plane(d) < 0 && gold_head(d) >= 0) out.add({gold_head(d), d});
  return out;
}

int PlaneAssignment::assigned_count() const {
  return static_cast<int>(std::count_if(plane_.begin() + 1, plane_.end(), [](int p) { return p >= 0; }));
}

std::optional<int> TransitionCosts::cost(Kind k) const {
  for (size_t i = 0; i < transitions.size(); ++i)
    if (transitions[i].kind == k) return costs[i];
  return std::nullopt;
}

bool TransitionCosts::is_zero_cost(Kind k) const {
  return std::any_of(zero_cost.begin(), zero_cost.end(), [k](const Transition& t) { return t.kind == k; });
}

namespace {

// Dependent index of the gold arc linking x and y, or -1.
int gold_link(const std::vector<int>& heads, int x, int y) {
  if (heads[static_cast<size_t>(y)] == x) return y;
  if (x > 0 && heads[static_cast<size_t>(x)] == y) return x;
  return -1;
}

// Topmost node of `stack` linked to the buffer front by an unbuilt gold arc
// whose plane satisfies `accept`. The stack is increasing, so the topmost
// candidate is the largest one present.
template <typename Accept>
int topmost_link(const Configuration& c, int plane, const std::vector<int>& heads,
                 const std::vector<std::vector<int>>& children, Accept accept) {
  const int b = c.buffer_front();
  int best = -1;
  auto consider = [&](int x, int dep) {
    if (x >= b || !c.in_stack(plane, x)) return;
    if (c.arcs().contains({heads[static_cast<size_t>(dep)], dep})) return;
    if (!accept(dep)) return;
    best = std::max(best, x);
  };
  if (b > 0 && heads[static_cast<size_t>(b)] >= 0) consider(heads[static_cast<size_t>(b)], b);
  for (int d : children[static_cast<size_t>(b)]) consider(d, d);
  return best;
}

// Whether node x has an unbuilt gold arc to a buffer node whose plane
// satisfies `accept`.
template <typename Accept>
bool pending_with_buffer(const Configuration& c, int x, const std::vector<int>& heads,
                         const std::vector<std::vector<int>>& children, Accept accept) {
  auto check = [&](int other, int dep) {
    return c.in_buffer(other) && !c.arcs().contains({heads[static_cast<size_t>(dep)], dep}) && accept(dep);
  };
  if (x > 0 && heads[static_cast<size_t>(x)] >= 0 && check(heads[static_cast<size_t>(x)], x)) return true;
  for (int d : children[static_cast<size_t>(x)])
    if (check(d, d)) return true;
  return false;
}

Transition arc_to(const Configuration& c, int dep) {
  return dep == c.buffer_front() ? right_arc() : left_arc();
}

}  // namespace

PlaneAssignment assign_planes(const DepGraph& gold) {
  const int n = gold.size();
  std::vector<int> heads = gold.heads;
  heads[0] = -1;
  std::vector<std::vector<int>> children(static_cast<size_t>(n) + 1);
  for (int d = 1; d <= n; ++d)
    if (heads[static_cast<size_t>(d)] >= 0) children[static_cast<size_t>(heads[static_cast<size_t>(d)])].push_back(d);

  // crossing graph over gold arcs, indexed by dependent
  std::vector<std::vector<int>> crosses(static_cast<size_t>(n) + 1);
  for (int d = 1; d <= n; ++d)
    for (int e = d + 1; e <= n; ++e)
      if (heads[static_cast<size_t>(d)] >= 0 && heads[static_cast<size_t>(e)] >= 0 &&
          arcs_cross({heads[static_cast<size_t>(d)], d}, {heads[static_cast<size_t>(e)], e})) {
        crosses[static_cast<size_t>(d)].push_back(e);
        crosses[static_cast<size_t>(e)].push_back(d);
      }

  std::vector<int> plane(static_cast<size_t>(n) + 1, -1);
  // Fixes the plane of `dep`'s arc and, by alternation, of its whole
  // crossing component. Arcs already fixed keep their plane.
  auto fix_component = [&](int dep, int p) {
    std::deque<int> queue{dep};
    plane[static_cast<size_t>(dep)] = p;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : crosses[static_cast<size_t>(u)]) {
        if (plane[static_cast<size_t>(v)] != -1) continue;
        plane[static_cast<size_t>(v)] = 1 - plane[static_cast<size_t>(u)];
        queue.push_back(v);
      }
    }
  };

  Configuration c = initial_config(n);
  while (!c.is_terminal()) {
    const int p = c.active();
    const int q = 1 - p;
    const auto& st = c.active_stack();
    auto open_or = [&](int want) { return [&, want](int dep) {
      int pl = plane[static_cast<size_t>(dep)];
      return pl == -1 || pl == want;
    }; };

    int x = topmost_link(c, p, heads, children, open_or(p));
    if (x >= 0) {
      int dep = gold_link(heads, x, c.buffer_front());
      if (plane[static_cast<size_t>(dep)] == -1) fix_component(dep, p);
      if (x == st.back()) {
        Transition t = arc_to(c, dep);
        if (is_legal(c, t)) {
          c.apply_in_place(t);
          continue;
        }
      } else {
        c.apply_in_place(reduce());
        continue;
      }
    }
    if (!st.empty() && !pending_with_buffer(c, st.back(), heads, children, open_or(p))) {
      c.apply_in_place(reduce());
      continue;
    }
    if (!c.last_was_switch() && topmost_link(c, q, heads, children, open_or(q)) >= 0) {
      c.apply_in_place(switch_planes());
      continue;
    }
    c.apply_in_place(shift());
  }

  std::vector<int> built(static_cast<size_t>(n) + 1, -1);
  for (int d = 1; d <= n; ++d)
    if (c.arcs().has_head(d)) built[static_cast<size_t>(d)] = c.plane_of(d);
  return PlaneAssignment(heads, built);
}

Transition static_oracle(const Configuration& c, const PlaneAssignment& pa) {
  if (c.is_terminal()) throw std::logic_error("static_oracle: terminal configuration");
  const int p = c.active();
  const auto& heads = pa.gold_heads();
  const auto& children = pa.children_lists();
  auto in_plane = [&pa](int want) { return [&pa, want](int dep) { return pa.plane(dep) == want; }; };
  const auto& st = c.active_stack();

  int x = topmost_link(c, p, heads, children, in_plane(p));
  if (x >= 0) {
    if (x == st.back()) return arc_to(c, gold_link(heads, x, c.buffer_front()));
    return reduce();
  }
  if (!st.empty() && !pending_with_buffer(c, st.back(), heads, children, in_plane(p))) return reduce();
  if (!c.last_was_switch() && topmost_link(c, 1 - p, heads, children, in_plane(1 - p)) >= 0)
    return switch_planes();
  return shift();
}

std::vector<Arc> unreachable_set(const Configuration& c, const PlaneAssignment& pa, int plane) {
  std::vector<Arc> out;
  const ArcSet& built = c.arcs();
  for (int d = 1; d <= pa.sentence_length(); ++d) {
    if (pa.plane(d) != plane) continue;
    const Arc a{pa.gold_head(d), d};
    if (c.has_arc(a, plane)) continue;
    const bool gone = !(c.in_stack(plane, a.lo()) || c.in_buffer(a.lo())) || !c.in_buffer(a.hi());
    const bool head_taken = built.has_head(d) && built.head_of(d) != a.head;
    const bool cyclic = same_wcc(c.wcc(), a.head, a.dep);
    const bool other_plane = built.contains(a) && c.plane_of(d) != plane;
    if (gone || head_taken || cyclic || other_plane) out.push_back(a);
  }
  return out;
}

namespace {

LossBreakdown unconstrained_loss(const Configuration& c, const PlaneAssignment& pa) {
  LossBreakdown out;
  const int nodes = c.node_count();
  std::vector<int> head(static_cast<size_t>(nodes), -1);
  for (int d = 1; d < nodes; ++d) head[static_cast<size_t>(d)] = c.arcs().head_of(d);
  std::vector<char> unreachable(static_cast<size_t>(nodes), 0);
  for (int p = 0; p < 2; ++p) {
    out.unreachable[p] = unreachable_set(c, pa, p);
    for (const Arc& a : out.unreachable[p]) unreachable[static_cast<size_t>(a.dep)] = 1;
  }
  // A u I_1 u I_2: reachable gold arcs only go to nodes that are headless in
  // A or already carry that arc, so in-degree stays <= 1.
  for (int d = 1; d < nodes; ++d) {
    if (pa.plane(d) < 0 || unreachable[static_cast<size_t>(d)]) continue;
    int& h = head[static_cast<size_t>(d)];
    if (h != -1 && h != pa.gold_head(d)) throw std::logic_error("loss: in-degree > 1 in A u I");
    h = pa.gold_head(d);
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(nodes));
  for (int d = 1; d < nodes; ++d)
    if (head[static_cast<size_t>(d)] >= 0) arcs.push_back({head[static_cast<size_t>(d)], d});
  out.cycle_count = count_cycles(arcs, nodes);
  out.total = static_cast<int>(out.unreachable[0].size() + out.unreachable[1].size()) + out.cycle_count;
  return out;
}

}  // namespace

LossBreakdown loss(const Configuration& c, const PlaneAssignment& pa) {
  if (pa.sentence_length() != c.sentence_length()) throw std::invalid_argument("loss: length mismatch");
  LossBreakdown out = unconstrained_loss(c, pa);
  if (c.last_was_switch() && !c.is_terminal()) {
    // Switching back is not allowed, so one of the other transitions comes
    // first.
    int best = TransitionCosts::kInfinite;
    for (const Transition& t : legal(c)) {
      if (t.kind == Kind::Switch) continue;
      best = std::min(best, unconstrained_loss(apply(c, t), pa).total);
    }
    out.forced_move_penalty = best - out.total;
    out.total = best;
  }
  return out;
}

TransitionCosts transition_costs(const Configuration& c, const PlaneAssignment& pa) {
  if (c.is_terminal()) throw std::logic_error("transition_costs: terminal configuration");
  const int base = loss(c, pa).total;
  TransitionCosts out;
  for (const Transition& t : legal(c)) {
    // After a Switch the loss already takes the best forced follow-up
    // transition, which is exactly the Switch look-ahead.
    out.transitions.push_back(t);
    out.costs.push_back(loss(apply(c, t), pa).total - base);
  }
  return regularize(c, std::move(out));
}

TransitionCosts regularize(const Configuration& /*c*/, TransitionCosts costs) {
  costs.zero_cost.clear();
  bool non_switch_zero = false;
  for (size_t i = 0; i < costs.transitions.size(); ++i)
    if (costs.costs[i] == 0 && costs.transitions[i].kind != Kind::Switch) non_switch_zero = true;
  for (size_t i = 0; i < costs.transitions.size(); ++i) {
    if (costs.costs[i] != 0) continue;
    if (costs.transitions[i].kind == Kind::Switch && non_switch_zero) continue;
    costs.zero_cost.push_back(costs.transitions[i]);
  }
  return costs;
}

}  // namespace twoplanar
