// Dependency graph primitives shared by the transition systems and oracles.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twoplanar {

struct Arc {
  int head = 0;
  int dep = 0;

  int lo() const { return head < dep ? head : dep; }
  int hi() const { return head < dep ? dep : head; }
  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

// Heads and labels over nodes 0..n; heads[0] is -1 (root has no head),
// heads[k] == 0 marks a root attachment.
struct DepGraph {
  std::vector<int> heads;
  std::vector<std::string> labels;

  DepGraph() = default;
  explicit DepGraph(int n) : heads(static_cast<size_t>(n) + 1, 0), labels(static_cast<size_t>(n) + 1) {
    heads[0] = -1;
  }

  int size() const { return static_cast<int>(heads.size()) - 1; }
  std::vector<Arc> arcs() const;
  bool operator==(const DepGraph&) const = default;
};

// Arcs with in-degree <= 1, indexed by dependent. Nodes are 0..n.
class ArcSet {
 public:
  ArcSet() = default;
  explicit ArcSet(int n) : head_(static_cast<size_t>(n) + 1, kNone) {}

  int nodes() const { return static_cast<int>(head_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  // Head of dep, or kNone.
  int head_of(int dep) const { return head_[static_cast<size_t>(dep)]; }
  bool has_head(int dep) const { return head_of(dep) != kNone; }
  bool contains(const Arc& a) const { return head_of(a.dep) == a.head; }

  // Throws std::logic_error if dep already has a different head.
  void add(const Arc& a);
  void erase(const Arc& a);

  std::vector<Arc> arcs() const;
  bool operator==(const ArcSet&) const = default;

  static constexpr int kNone = -1;

 private:
  std::vector<int> head_;
  int count_ = 0;
};

// Weakly connected components under incremental arc insertion.
class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(int nodes);

  int find(int x) const;
  void unite(int a, int b);
  bool same(int a, int b) const { return find(a) == find(b); }
  int nodes() const { return static_cast<int>(parent_.size()); }

 private:
  void check(int x) const;
  // find() compresses paths; parent_ is logically const.
  mutable std::vector<int> parent_;
  std::vector<int> rank_;
};

bool same_wcc(const UnionFind& uf, int x, int y);
void add_arc_wcc(UnionFind& uf, const Arc& arc);

// True iff the spans of a and b strictly interleave. Shared endpoints and
// nesting do not cross.
bool arcs_cross(const Arc& a, const Arc& b);

// Number of directed cycles in a graph where every node has in-degree <= 1.
// Throws std::invalid_argument on in-degree > 1 or out-of-range nodes.
int count_cycles(std::span<const Arc> arcs, int nodes);
int count_cycles(const ArcSet& arcs);

// Tokens 1..n whose heads differ; labels ignored.
int hamming_loss(const DepGraph& pred, const DepGraph& gold);

// 2-coloring of the crossing graph (vertices = arcs, edges = crossing
// pairs), or nullopt when it is not bipartite. Colors are 0/1 per input arc;
// each component's first arc in input order gets color 0.
std::optional<std::vector<int>> two_color_crossings(std::span<const Arc> arcs);

bool is_noncrossing(std::span<const Arc> arcs);
bool is_two_planar(std::span<const Arc> arcs);

// True iff heads[] forms a forest: in-degree <= 1 trivially, no cycles.
bool is_forest(const std::vector<int>& heads);

}  // namespace twoplanar
