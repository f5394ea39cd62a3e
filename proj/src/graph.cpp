#include "twoplanar/graph.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace twoplanar {

std::vector<Arc> DepGraph::arcs() const {
  std::vector<Arc> out;
  for (int d = 1; d <= size(); ++d)
    if (heads[static_cast<size_t>(d)] >= 0) out.push_back({heads[static_cast<size_t>(d)], d});
  return out;
}

void ArcSet::add(const Arc& a) {
  int& h = head_.at(static_cast<size_t>(a.dep));
  if (h == a.head) return;
  if (h != kNone)
    throw std::logic_error("ArcSet: node " + std::to_string(a.dep) + " already has a head");
  h = a.head;
  ++count_;
}

void ArcSet::erase(const Arc& a) {
  int& h = head_.at(static_cast<size_t>(a.dep));
  if (h != a.head) return;
  h = kNone;
  --count_;
}

std::vector<Arc> ArcSet::arcs() const {
  std::vector<Arc> out;
  out.reserve(static_cast<size_t>(count_));
  for (int d = 0; d < nodes(); ++d)
    if (head_[static_cast<size_t>(d)] != kNone) out.push_back({head_[static_cast<size_t>(d)], d});
  return out;
}

UnionFind::UnionFind(int nodes)
    : parent_(static_cast<size_t>(nodes)), rank_(static_cast<size_t>(nodes), 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

void UnionFind::check(int x) const {
  if (x < 0 || x >= nodes())
    throw std::out_of_range("UnionFind: node " + std::to_string(x) + " out of range");
}

int UnionFind::find(int x) const {
  check(x);
  int root = x;
  while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
  while (parent_[static_cast<size_t>(x)] != root) {
    int next = parent_[static_cast<size_t>(x)];
    parent_[static_cast<size_t>(x)] = root;
    x = next;
  }
  return root;
}

void UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  auto& ra = rank_[static_cast<size_t>(a)];
  auto& rb = rank_[static_cast<size_t>(b)];
  if (ra < rb) {
    parent_[static_cast<size_t>(a)] = b;
  } else if (rb < ra) {
    parent_[static_cast<size_t>(b)] = a;
  } else {
    parent_[static_cast<size_t>(b)] = a;
    ++ra;
  }
}

bool same_wcc(const UnionFind& uf, int x, int y) { return uf.same(x, y); }

void add_arc_wcc(UnionFind& uf, const Arc& arc) { uf.unite(arc.head, arc.dep); }

bool arcs_cross(const Arc& a, const Arc& b) {
  const int al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  return (al < bl && bl < ah && ah < bh) || (bl < al && al < bh && bh < ah);
}

namespace {

// Follows head pointers with white/grey/black marking; each node is visited
// once, so the whole pass is O(n).
int count_cycles_heads(const std::vector<int>& head) {
  const size_t n = head.size();
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> color(n, kWhite);
  std::vector<int> path;
  int cycles = 0;
  for (size_t start = 0; start < n; ++start) {
    if (color[start] != kWhite) continue;
    path.clear();
    int v = static_cast<int>(start);
    while (v >= 0 && color[static_cast<size_t>(v)] == kWhite) {
      color[static_cast<size_t>(v)] = kGrey;
      path.push_back(v);
      v = head[static_cast<size_t>(v)];
    }
    if (v >= 0 && color[static_cast<size_t>(v)] == kGrey) ++cycles;
    for (int u : path) color[static_cast<size_t>(u)] = kBlack;
  }
  return cycles;
}

}  // namespace

int count_cycles(std::span<const Arc> arcs, int nodes) {
  std::vector<int> head(static_cast<size_t>(nodes), -1);
  for (const Arc& a : arcs) {
    if (a.head < 0 || a.head >= nodes || a.dep < 0 || a.dep >= nodes)
      throw std::invalid_argument("count_cycles: node out of range");
    int& h = head[static_cast<size_t>(a.dep)];
    if (h != -1 && h != a.head)
      throw std::invalid_argument("count_cycles: in-degree > 1 at node " + std::to_string(a.dep));
    h = a.head;
  }
  return count_cycles_heads(head);
}

int count_cycles(const ArcSet& arcs) {
  std::vector<int> head(static_cast<size_t>(arcs.nodes()));
  for (int d = 0; d < arcs.nodes(); ++d) head[static_cast<size_t>(d)] = arcs.head_of(d);
  return count_cycles_heads(head);
}

int hamming_loss(const DepGraph& pred, const DepGraph& gold) {
  if (pred.size() != gold.size()) throw std::invalid_argument("hamming_loss: length mismatch");
  int loss = 0;
  for (int d = 1; d <= gold.size(); ++d)
    if (pred.heads[static_cast<size_t>(d)] != gold.heads[static_cast<size_t>(d)]) ++loss;
  return loss;
}

std::optional<std::vector<int>> two_color_crossings(std::span<const Arc> arcs) {
  const size_t m = arcs.size();
  std::vector<std::vector<size_t>> adj(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (arcs_cross(arcs[i], arcs[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<int> color(m, -1);
  std::deque<size_t> queue;
  for (size_t s = 0; s < m; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      size_t u = queue.front();
      queue.pop_front();
      for (size_t v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_noncrossing(std::span<const Arc> arcs) {
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs_cross(arcs[i], arcs[j])) return false;
  return true;
}

bool is_two_planar(std::span<const Arc> arcs) { return two_color_crossings(arcs).has_value(); }

bool is_forest(const std::vector<int>& heads) {
  std::vector<int> h(heads);
  if (!h.empty()) h[0] = -1;
  for (int v : h)
    if (v >= static_cast<int>(h.size())) return false;
  return count_cycles_heads(h) == 0;
}

}  // namespace twoplanar
