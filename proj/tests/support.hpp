// Reference implementations used as test oracles. They are deliberately
// naive and share no code with the library beyond plain data types.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "twoplanar/graph.hpp"
#include "twoplanar/oracle.hpp"
#include "twoplanar/transition_system.hpp"

namespace testing {

using twoplanar::Arc;

// Tree from the heads of nodes 1..n; labels "dep".
inline twoplanar::DepGraph tree(const std::vector<int>& heads) {
  twoplanar::DepGraph g(static_cast<int>(heads.size()));
  for (size_t i = 0; i < heads.size(); ++i) {
    g.heads[i + 1] = heads[i];
    g.labels[i + 1] = "dep";
  }
  return g;
}

// Every tree over nodes 0..n (heads of 1..n, acyclic), in lexicographic
// order of the head vector.
inline std::vector<std::vector<int>> all_trees(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> h(static_cast<size_t>(n), 0);
  std::function<void(int)> fill = [&](int d) {
    if (d > n) {
      std::vector<int> full{-1};
      full.insert(full.end(), h.begin(), h.end());
      // acyclic: following heads from every node reaches 0 within n steps
      for (int v = 1; v <= n; ++v) {
        int x = v, steps = 0;
        while (x != 0 && steps <= n) x = full[static_cast<size_t>(x)], ++steps;
        if (x != 0) return;
      }
      out.push_back(h);
      return;
    }
    for (int head = 0; head <= n; ++head) {
      if (head == d) continue;
      h[static_cast<size_t>(d - 1)] = head;
      fill(d + 1);
    }
  };
  fill(1);
  return out;
}

inline bool spans_interleave(const Arc& a, const Arc& b) {
  int a0 = std::min(a.head, a.dep), a1 = std::max(a.head, a.dep);
  int b0 = std::min(b.head, b.dep), b1 = std::max(b.head, b.dep);
  return (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
}

// Counts simple directed cycles by trying every start node and every path
// through larger-numbered nodes.
inline int enumerate_cycles(const std::vector<Arc>& arcs, int nodes) {
  std::vector<std::vector<int>> out(static_cast<size_t>(nodes));
  for (const Arc& a : arcs) out[static_cast<size_t>(a.head)].push_back(a.dep);
  int count = 0;
  std::vector<char> on_path(static_cast<size_t>(nodes), 0);
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (int w : out[static_cast<size_t>(v)]) {
      if (w == start) {
        ++count;
      } else if (w > start && !on_path[static_cast<size_t>(w)]) {
        on_path[static_cast<size_t>(w)] = 1;
        dfs(start, w);
        on_path[static_cast<size_t>(w)] = 0;
      }
    }
  };
  for (int s = 0; s < nodes; ++s) {
    on_path[static_cast<size_t>(s)] = 1;
    dfs(s, s);
    on_path[static_cast<size_t>(s)] = 0;
  }
  return count;
}

// Component id per node, recomputed by graph search over undirected arcs.
inline std::vector<int> batch_components(const std::vector<Arc>& arcs, int nodes) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(nodes));
  for (const Arc& a : arcs) {
    adj[static_cast<size_t>(a.head)].push_back(a.dep);
    adj[static_cast<size_t>(a.dep)].push_back(a.head);
  }
  std::vector<int> comp(static_cast<size_t>(nodes), -1);
  for (int s = 0; s < nodes; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> todo{s};
    comp[static_cast<size_t>(s)] = s;
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      for (int w : adj[static_cast<size_t>(v)])
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = s;
          todo.push_back(w);
        }
    }
  }
  return comp;
}

// Is there a directed path from -> ... -> to along head->dep arcs?
inline bool reaches(const std::vector<Arc>& arcs, int from, int to) {
  std::vector<int> todo{from};
  std::vector<int> seen{from};
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    if (v == to) return true;
    for (const Arc& a : arcs)
      if (a.head == v && std::find(seen.begin(), seen.end(), a.dep) == seen.end()) {
        seen.push_back(a.dep);
        todo.push_back(a.dep);
      }
  }
  return false;
}

// Tries every split of the arcs into two sets.
inline bool brute_two_planar(const std::vector<Arc>& arcs) {
  const size_t m = arcs.size();
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    bool ok = true;
    for (size_t i = 0; i < m && ok; ++i)
      for (size_t j = i + 1; j < m && ok; ++j)
        if (((mask >> i) & 1) == ((mask >> j) & 1) && spans_interleave(arcs[i], arcs[j])) ok = false;
    if (ok) return true;
  }
  return false;
}

// Breadth-first 2-coloring of the graph whose vertices are arcs and whose
// edges join interleaving spans. Works for any number of arcs.
inline bool crossing_graph_bipartite(const std::vector<Arc>& arcs) {
  const size_t m = arcs.size();
  std::vector<int> color(m, -1);
  for (size_t s = 0; s < m; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<size_t> queue{s};
    for (size_t q = 0; q < queue.size(); ++q) {
      const size_t v = queue[q];
      for (size_t w = 0; w < m; ++w) {
        if (w == v || !spans_interleave(arcs[v], arcs[w])) continue;
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool brute_noncrossing(const std::vector<Arc>& arcs) {
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j)
      if (spans_interleave(arcs[i], arcs[j])) return false;
  return true;
}

// Gold arcs of the assignment missing from the final arcs or built in the
// wrong plane.
inline int terminal_loss(const twoplanar::Configuration& c, const twoplanar::PlaneAssignment& pa) {
  int loss = 0;
  for (int d = 1; d <= pa.sentence_length(); ++d) {
    if (pa.plane(d) < 0) continue;
    if (c.arcs().head_of(d) != pa.gold_head(d) || c.plane_of(d) != pa.plane(d)) ++loss;
  }
  return loss;
}

// Everything that determines the future of a configuration.
inline std::string state_key(const twoplanar::Configuration& c) {
  std::string k;
  for (int p = 0; p < 2; ++p) {
    for (int x : c.stack(p)) k += std::to_string(x) + ",";
    k += "|";
  }
  k += std::to_string(c.active()) + std::to_string(c.last_was_switch()) + std::to_string(c.buffer_front()) + "|";
  for (int d = 0; d <= c.sentence_length(); ++d)
    k += std::to_string(c.arcs().head_of(d)) + ":" + std::to_string(c.plane_of(d)) + ",";
  return k;
}

// Depth-first enumeration of every legal completion using the library's own
// transitions, memoised on state_key.
inline int raw_min_loss(const twoplanar::Configuration& c, const twoplanar::PlaneAssignment& pa,
                        std::map<std::string, int>& memo) {
  if (c.is_terminal()) return terminal_loss(c, pa);
  const std::string k = state_key(c);
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  int best = 1 << 30;
  for (const auto& t : twoplanar::legal(c)) best = std::min(best, raw_min_loss(twoplanar::apply(c, t), pa, memo));
  memo[k] = best;
  return best;
}

inline int raw_min_loss(const twoplanar::Configuration& c, const twoplanar::PlaneAssignment& pa) {
  std::map<std::string, int> memo;
  return raw_min_loss(c, pa, memo);
}

}  // namespace testing
