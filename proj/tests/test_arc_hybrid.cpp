#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"
#include "twoplanar/arc_hybrid.hpp"
#include "twoplanar/brute_force.hpp"
#include "twoplanar/treegen.hpp"

using namespace twoplanar;

namespace {

using HC = HybridConfiguration;

Transition pick(Rng& rng, const std::vector<Transition>& ts) {
  return ts[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(ts.size()) - 1))];
}

// In-order traversal written from scratch: left dependents, head, right
// dependents, each side in surface order.
std::vector<int> inorder_rank(const DepGraph& g) {
  const int n = g.size();
  std::vector<int> order;
  std::function<void(int)> visit = [&](int h) {
    for (int d = 0; d < h; ++d)
      if (g.heads[static_cast<size_t>(d)] == h) visit(d);
    order.push_back(h);
    for (int d = h + 1; d <= n; ++d)
      if (g.heads[static_cast<size_t>(d)] == h) visit(d);
  };
  visit(0);
  std::vector<int> rank(static_cast<size_t>(n) + 1);
  for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
  return rank;
}

// Arcs with endpoints renamed to their ranks.
std::vector<Arc> reordered(const DepGraph& g, const std::vector<int>& rank) {
  std::vector<Arc> out;
  for (const Arc& a : g.arcs()) out.push_back({rank[static_cast<size_t>(a.head)], rank[static_cast<size_t>(a.dep)]});
  return out;
}

// Does any full derivation of gold use Swap? Exhaustive, only gold arcs.
bool some_derivation(const HC& c, const DepGraph& gold, bool allow_swap) {
  if (c.is_terminal()) return hybrid_extract_parse(c).heads == gold.heads && c.arcs().size() == gold.size();
  for (const Transition& t : hybrid_legal(c)) {
    if (t.kind == Kind::Swap && !allow_swap) continue;
    const HC next = hybrid_apply(c, t);
    if (t.is_arc()) {
      const auto before = c.arcs().arcs();
      for (const Arc& a : next.arcs().arcs())
        if (std::find(before.begin(), before.end(), a) == before.end() && gold.heads[static_cast<size_t>(a.dep)] != a.head)
          goto skip;
    }
    if (some_derivation(next, gold, allow_swap)) return true;
  skip:;
  }
  return false;
}

}  // namespace

TEST_SUITE("arc_hybrid") {

TEST_CASE("initial configuration and moves") {
  HC c = hybrid_initial(3);
  CHECK(c.stack().empty());
  CHECK(c.buffer() == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(c.is_terminal());
  c = hybrid_apply(c, shift());
  c = hybrid_apply(c, shift());
  c = hybrid_apply(c, shift());
  CHECK(c.stack() == std::vector<int>{0, 1, 2});
  CHECK(hybrid_is_legal(c, swap()));
  c = hybrid_apply(c, swap());
  CHECK(c.stack() == std::vector<int>{0, 1});
  CHECK(c.buffer() == std::vector<int>{3, 2});
  CHECK(c.swaps() == 1);
  c = hybrid_apply(c, shift());
  // 3 is the top, 2 the front: the order condition blocks a swap back
  CHECK_FALSE(hybrid_is_legal(c, swap()));
  CHECK_THROWS_AS(hybrid_apply(c, swap()), IllegalTransition);
  c = hybrid_apply(c, left_arc(0));
  CHECK(c.arcs().contains({2, 3}));
  c = hybrid_apply(c, right_arc(0));
  CHECK(c.arcs().contains({0, 1}));
  CHECK(c.stack() == std::vector<int>{0});
  CHECK_FALSE(c.is_terminal());
  c = hybrid_apply(hybrid_apply(c, shift()), right_arc(0));
  REQUIRE(c.is_terminal());
  CHECK(hybrid_extract_parse(c).heads == std::vector<int>{-1, 0, 0, 2});
  CHECK_THROWS(hybrid_initial(0));
}

TEST_CASE("projective order") {
  Rng rng(2);
  for (int i = 0; i < 2000; ++i) {
    const DepGraph g = random_tree(uniform_int(rng, 1, 12), rng);
    const ProjectiveOrder po = projective_order(g);
    REQUIRE(po == inorder_rank(g));
    std::vector<int> sorted = po;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ids(sorted.size());
    std::iota(ids.begin(), ids.end(), 0);
    REQUIRE(sorted == ids);
    if (testing::brute_noncrossing(g.arcs())) REQUIRE(po == ids);
    REQUIRE(testing::brute_noncrossing(reordered(g, po)));
  }
}

TEST_CASE("Swap is needed exactly for non-projective trees") {
  // 0->2, 0->3, 3->1: 3->1 crosses 0->2
  const DepGraph np = testing::tree({3, 0, 0});
  REQUIRE_FALSE(testing::brute_noncrossing(np.arcs()));
  CHECK_FALSE(some_derivation(hybrid_initial(3), np, false));
  CHECK(some_derivation(hybrid_initial(3), np, true));
  for (int n = 1; n <= 4; ++n)
    for (const auto& h : testing::all_trees(n)) {
      const DepGraph g = testing::tree(h);
      REQUIRE(some_derivation(hybrid_initial(n), g, false) == testing::brute_noncrossing(g.arcs()));
    }
}

TEST_CASE("Swap alone when the order calls for it") {
  Rng rng(5);
  long fired = 0;
  for (int i = 0; i < 2000; ++i) {
    const DepGraph g = random_tree(uniform_int(rng, 2, 8), rng);
    const ProjectiveOrder po = projective_order(g);
    HC c = hybrid_initial(g.size());
    while (!c.is_terminal()) {
      const TransitionCosts tc = hybrid_oracle(c, g, po);
      const bool order = hybrid_is_legal(c, swap()) &&
                         po[static_cast<size_t>(c.stack().back())] > po[static_cast<size_t>(c.buffer_front())];
      if (order) {
        REQUIRE(tc.zero_cost == std::vector<Transition>{swap()});
        REQUIRE(tc.transitions.size() == 1);
        ++fired;
      } else {
        REQUIRE_FALSE(tc.is_zero_cost(Kind::Swap));
      }
      c = hybrid_apply(c, pick(rng, tc.zero_cost));
    }
  }
  CHECK(fired > 0);
}

TEST_CASE("zero-cost walks rebuild any tree") {
  Rng rng(7);
  for (int i = 0; i < 3000; ++i) {
    const int n = uniform_int(rng, 1, 9);
    const DepGraph g = i % 2 ? random_non_projective_tree(std::max(n, 3), rng) : random_tree(n, rng);
    const ProjectiveOrder po = projective_order(g);
    HC c = hybrid_initial(g.size());
    int steps = 0;
    std::set<std::pair<int, int>> swapped;
    while (!c.is_terminal()) {
      const TransitionCosts tc = hybrid_oracle(c, g, po);
      REQUIRE_FALSE(tc.zero_cost.empty());
      const Transition t = pick(rng, tc.zero_cost);
      if (t.kind == Kind::Swap) REQUIRE(swapped.insert({c.stack().back(), c.buffer_front()}).second);
      c = hybrid_apply(c, t);
      ++steps;
    }
    REQUIRE(hamming_loss(hybrid_extract_parse(c), g) == 0);
    REQUIRE(c.arcs().size() == g.size());
    const int m = g.size();
    // m + 1 shifts, m arc moves, and one more shift per swap
    REQUIRE(steps == 2 * m + 1 + 2 * c.swaps());
    REQUIRE(c.swaps() <= m * (m - 1) / 2);
  }
}

TEST_CASE("static oracle follows the tie order") {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const DepGraph g = random_tree(uniform_int(rng, 1, 9), rng);
    const ProjectiveOrder po = projective_order(g);
    HC c = hybrid_initial(g.size());
    while (!c.is_terminal()) {
      const TransitionCosts tc = hybrid_oracle(c, g, po);
      const Transition t = hybrid_static_oracle(c, g, po);
      Kind expect = Kind::Shift;
      for (Kind k : {Kind::Shift, Kind::RightArc, Kind::LeftArc, Kind::Swap})
        if (tc.is_zero_cost(k)) expect = k;
      REQUIRE(t.kind == expect);
      c = hybrid_apply(c, t);
    }
    REQUIRE(hybrid_extract_parse(c).heads == g.heads);
  }
}

TEST_CASE("costs equal loss deltas on projective trees") {
  Rng rng(10);
  long checked = 0;
  for (int i = 0; i < 400; ++i) {
    const DepGraph g = random_projective_tree(uniform_int(rng, 1, 6), rng);
    const ProjectiveOrder po = projective_order(g);
    BruteForceCache cache;
    HC c = hybrid_initial(g.size());
    while (!c.is_terminal()) {
      const int base = hybrid_brute_force_min_loss(c, g, false, &cache);
      const TransitionCosts tc = hybrid_oracle(c, g, po);
      for (size_t k = 0; k < tc.transitions.size(); ++k) {
        const HC next = hybrid_apply(c, tc.transitions[k]);
        REQUIRE(tc.costs[k] == hybrid_brute_force_min_loss(next, g, false, &cache) - base);
        ++checked;
      }
      std::vector<Transition> moves;
      for (const Transition& t : hybrid_legal(c))
        if (t.kind != Kind::Swap) moves.push_back(t);
      c = hybrid_apply(c, pick(rng, moves));
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("allowing Swap never raises the reachable minimum") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const DepGraph g = random_projective_tree(uniform_int(rng, 1, 5), rng);
    HC c = hybrid_initial(g.size());
    while (!c.is_terminal()) {
      REQUIRE(hybrid_brute_force_min_loss(c, g, true) <= hybrid_brute_force_min_loss(c, g, false));
      c = hybrid_apply(c, pick(rng, hybrid_legal(c)));
    }
  }
  CHECK_THROWS_AS(hybrid_brute_force_min_loss(hybrid_initial(7), testing::tree({0, 1, 2, 3, 4, 5, 6}), false),
                  std::invalid_argument);
}

}
