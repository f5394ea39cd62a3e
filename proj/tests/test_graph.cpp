#include <doctest.h>

#include "support.hpp"
#include "twoplanar/graph.hpp"
#include "twoplanar/treegen.hpp"

using namespace twoplanar;

TEST_SUITE("graph") {

TEST_CASE("crossing test") {
  CHECK(arcs_cross({1, 3}, {2, 4}));
  CHECK_FALSE(arcs_cross({1, 4}, {2, 3}));
  CHECK_FALSE(arcs_cross({1, 2}, {2, 3}));
  CHECK(arcs_cross({3, 1}, {4, 2}));
  CHECK(arcs_cross({0, 2}, {3, 1}));
}

TEST_CASE("crossing is symmetric and matches span interleaving") {
  Rng rng(11);
  for (int i = 0; i < 5000; ++i) {
    Arc a{uniform_int(rng, 0, 9), 0}, b{uniform_int(rng, 0, 9), 0};
    do a.dep = uniform_int(rng, 1, 9); while (a.dep == a.head);
    do b.dep = uniform_int(rng, 1, 9); while (b.dep == b.head);
    CHECK(arcs_cross(a, b) == arcs_cross(b, a));
    CHECK(arcs_cross(a, b) == testing::spans_interleave(a, b));
  }
}

TEST_CASE("cycle counting examples") {
  std::vector<Arc> two_cycle{{2, 3}, {3, 2}};
  CHECK(count_cycles(two_cycle, 4) == 1);
  CHECK(count_cycles(testing::tree({2, 0, 2}).arcs(), 4) == 0);
  std::vector<Arc> two{{1, 2}, {2, 1}, {3, 4}, {4, 5}, {5, 3}, {0, 6}};
  CHECK(count_cycles(two, 7) == 2);
  std::vector<Arc> bad{{1, 3}, {2, 3}};
  CHECK_THROWS_AS(count_cycles(bad, 4), std::invalid_argument);
}

TEST_CASE("cycle counting matches exhaustive enumeration") {
  Rng rng(5);
  for (int i = 0; i < 3000; ++i) {
    const int nodes = uniform_int(rng, 1, 9);
    const auto arcs = random_functional_graph(nodes, rng);
    REQUIRE(count_cycles(arcs, nodes) == testing::enumerate_cycles(arcs, nodes));
  }
}

TEST_CASE("union-find examples") {
  UnionFind uf(5);
  CHECK_FALSE(same_wcc(uf, 1, 2));
  add_arc_wcc(uf, {1, 2});
  add_arc_wcc(uf, {3, 2});
  CHECK(same_wcc(uf, 1, 3));
  CHECK_FALSE(same_wcc(uf, 0, 4));
  CHECK(uf.find(uf.find(3)) == uf.find(3));
  CHECK_THROWS(same_wcc(uf, 0, 5));
}

TEST_CASE("incremental components equal recomputed components") {
  Rng rng(21);
  for (int round = 0; round < 500; ++round) {
    const int nodes = uniform_int(rng, 2, 12);
    UnionFind uf(nodes);
    std::vector<Arc> arcs;
    for (int k = 0; k < nodes; ++k) {
      Arc a{uniform_int(rng, 0, nodes - 1), uniform_int(rng, 0, nodes - 1)};
      if (a.head == a.dep) continue;
      arcs.push_back(a);
      add_arc_wcc(uf, a);
      const auto comp = testing::batch_components(arcs, nodes);
      for (int x = 0; x < nodes; ++x)
        for (int y = 0; y < nodes; ++y)
          REQUIRE(same_wcc(uf, x, y) == (comp[static_cast<size_t>(x)] == comp[static_cast<size_t>(y)]));
    }
  }
}

TEST_CASE("Hamming loss") {
  const DepGraph a = testing::tree({2, 0, 2}), b = testing::tree({2, 0, 1});
  CHECK(hamming_loss(a, a) == 0);
  CHECK(hamming_loss(a, b) == 1);
  CHECK(hamming_loss(b, a) == 1);
  CHECK_THROWS(hamming_loss(a, DepGraph(2)));
}

TEST_CASE("arc set keeps one head per dependent") {
  ArcSet s(4);
  s.add({2, 1});
  CHECK(s.contains({2, 1}));
  CHECK(s.head_of(1) == 2);
  CHECK_THROWS_AS(s.add({3, 1}), std::logic_error);
  s.erase({2, 1});
  CHECK(s.empty());
}

TEST_CASE("two-planarity agrees with trying every split") {
  Rng rng(8);
  int non_two_planar = 0;
  for (int i = 0; i < 1500; ++i) {
    const DepGraph g = random_tree(uniform_int(rng, 1, 10), rng);
    const auto arcs = g.arcs();
    const bool two = testing::brute_two_planar(arcs);
    REQUIRE(is_two_planar(arcs) == two);
    REQUIRE(is_noncrossing(arcs) == testing::brute_noncrossing(arcs));
    non_two_planar += !two;
    if (auto colors = two_color_crossings(arcs))
      for (size_t x = 0; x < arcs.size(); ++x)
        for (size_t y = x + 1; y < arcs.size(); ++y)
          if (arcs_cross(arcs[x], arcs[y])) REQUIRE((*colors)[x] != (*colors)[y]);
  }
  CHECK(non_two_planar > 0);
}

TEST_CASE("forest check") {
  CHECK(is_forest({-1, 2, 0, 2}));
  CHECK(is_forest({-1, 0, 0}));
  CHECK_FALSE(is_forest({-1, 2, 1}));
}

}
