#include "twoplanar/brute_force.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace twoplanar {

namespace {

struct PlanarState {
  int n = 0;
  int front = 0;
  int active = 0;
  bool last_switch = false;
  std::array<std::uint16_t, 2> stack{};  // bitmask; stacks are increasing
  std::array<std::int8_t, kBruteForceHardLimit + 1> head{};
  std::array<std::int8_t, kBruteForceHardLimit + 1> plane{};

  // Memo key. Arcs enter only through which nodes already have a head,
  // the weakly connected components (for a headless node, "is an ancestor of
  // b" is the same as "shares b's component") and which gold arcs are
  // already built correctly, so states agreeing on those have the same
  // completions.
  std::uint64_t key(const PlaneAssignment& pa) const {
    std::uint64_t k = static_cast<std::uint64_t>(front) | static_cast<std::uint64_t>(active) << 4 |
                      static_cast<std::uint64_t>(last_switch) << 5 | static_cast<std::uint64_t>(stack[0]) << 6 |
                      static_cast<std::uint64_t>(stack[1]) << 15;
    const auto comp = components();
    for (int d = 1; d <= n; ++d) {
      const auto di = static_cast<size_t>(d);
      if (head[di] >= 0) k |= std::uint64_t{1} << (24 + d - 1);
      if (head[di] >= 0 && head[di] == pa.gold_head(d) && plane[di] == pa.plane(d))
        k |= std::uint64_t{1} << (32 + d - 1);
      k |= static_cast<std::uint64_t>(comp[di]) << (40 + 3 * (d - 1));
    }
    return k;
  }

  // Smallest node of each node's weakly connected component.
  std::array<int, kBruteForceHardLimit + 1> components() const {
    std::array<int, kBruteForceHardLimit + 1> label{};
    for (int v = 0; v <= n; ++v) label[static_cast<size_t>(v)] = v;
    // tiny graphs: relax until stable
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 1; v <= n; ++v) {
        int h = head[static_cast<size_t>(v)];
        if (h < 0) continue;
        int m = std::min(label[static_cast<size_t>(v)], label[static_cast<size_t>(h)]);
        if (label[static_cast<size_t>(v)] != m || label[static_cast<size_t>(h)] != m) {
          label[static_cast<size_t>(v)] = label[static_cast<size_t>(h)] = m;
          changed = true;
        }
      }
    }
    return label;
  }

  int top() const {
    std::uint16_t s = stack[static_cast<size_t>(active)];
    return static_cast<int>(std::bit_width(s)) - 1;
  }

  // true iff `to` is reachable from `from` by following head pointers
  // (a possibly empty upward path)
  bool reaches_up(int from, int to) const {
    for (int v = from; v >= 0; v = head[static_cast<size_t>(v)])
      if (v == to) return true;
    return false;
  }
};

// Gold arcs that no continuation can build correctly, by direct
// monotonicity of the transitions: heads are never replaced, nodes never
// return to the buffer or to a stack they were popped from.
int certainly_lost(const PlanarState& s, const PlaneAssignment& pa) {
  int lost = 0;
  for (int d = 1; d <= s.n; ++d) {
    const int p = pa.plane(d);
    if (p < 0) continue;
    const auto di = static_cast<size_t>(d);
    const int h = pa.gold_head(d);
    if (s.head[di] >= 0) {
      if (s.head[di] != h || s.plane[di] != p) ++lost;
      continue;
    }
    const int lo = std::min(h, d), hi = std::max(h, d);
    const bool lo_alive = lo >= s.front || (s.stack[static_cast<size_t>(p)] >> lo & 1u);
    if (hi < s.front || !lo_alive) ++lost;
  }
  return lost;
}

int terminal_loss(const PlanarState& s, const PlaneAssignment& pa) {
  int missed = 0;
  for (int d = 1; d <= s.n; ++d) {
    if (pa.plane(d) < 0) continue;
    if (s.head[static_cast<size_t>(d)] != pa.gold_head(d) || s.plane[static_cast<size_t>(d)] != pa.plane(d)) ++missed;
  }
  return missed;
}

template <typename Visit>
void planar_successors(const PlanarState& s, Visit&& visit) {
  const int top = s.top();
  const int b = s.front;
  if (top >= 0) {
    // right-arc top -> b: b headless and b not above top in A
    if (s.head[static_cast<size_t>(b)] < 0 && !s.reaches_up(top, b)) {
      PlanarState next = s;
      next.head[static_cast<size_t>(b)] = static_cast<std::int8_t>(top);
      next.plane[static_cast<size_t>(b)] = static_cast<std::int8_t>(s.active);
      next.last_switch = false;
      if (visit(next)) return;
    }
    // left-arc b -> top
    if (top != 0 && s.head[static_cast<size_t>(top)] < 0 && !s.reaches_up(b, top)) {
      PlanarState next = s;
      next.head[static_cast<size_t>(top)] = static_cast<std::int8_t>(b);
      next.plane[static_cast<size_t>(top)] = static_cast<std::int8_t>(s.active);
      next.last_switch = false;
      if (visit(next)) return;
    }
    {  // reduce
      PlanarState next = s;
      next.stack[static_cast<size_t>(s.active)] &= static_cast<std::uint16_t>(~(1u << top));
      next.last_switch = false;
      if (visit(next)) return;
    }
  }
  if (!s.last_switch) {
    PlanarState next = s;
    next.active = 1 - s.active;
    next.last_switch = true;
    if (visit(next)) return;
  }
  {  // shift
    PlanarState next = s;
    next.stack[0] |= static_cast<std::uint16_t>(1u << b);
    next.stack[1] |= static_cast<std::uint16_t>(1u << b);
    ++next.front;
    next.last_switch = false;
    visit(next);
  }
}

// Whether some completion of s misses at most `budget` gold arcs. memo maps
// a state key to a proven lower bound on its minimum loss.
bool planar_within(const PlanarState& s, const PlaneAssignment& pa, int budget,
                   std::unordered_map<std::uint64_t, int>& memo) {
  if (s.front > s.n) return terminal_loss(s, pa) <= budget;
  if (certainly_lost(s, pa) > budget) return false;
  const std::uint64_t k = s.key(pa);
  auto it = memo.find(k);
  if (it != memo.end() && it->second > budget) return false;
  bool found = false;
  planar_successors(s, [&](const PlanarState& next) {
    found = planar_within(next, pa, budget, memo);
    return found;
  });
  if (!found) {
    int& bound = memo[k];
    bound = std::max(bound, budget + 1);
  }
  return found;
}

struct HybridState {
  std::vector<std::int8_t> stack;
  std::vector<std::int8_t> buffer;  // front first
  std::vector<std::int8_t> head;

  std::string key(bool allow_swap) const {
    std::string k;
    k.reserve(stack.size() + buffer.size() + head.size() + 3);
    k.push_back(allow_swap ? 'S' : 'N');
    k.append(stack.begin(), stack.end());
    k.push_back('|');
    k.append(buffer.begin(), buffer.end());
    k.push_back('|');
    k.append(head.begin(), head.end());
    return k;
  }
};

int hybrid_search(const HybridState& s, const DepGraph& gold, bool allow_swap,
                  std::unordered_map<std::string, int>& memo) {
  const int n = gold.size();
  if (s.buffer.empty() && s.stack.size() <= 1) {
    int loss = 0;
    for (int d = 1; d <= n; ++d)
      if (s.head[static_cast<size_t>(d)] != gold.heads[static_cast<size_t>(d)]) ++loss;
    return loss;
  }
  std::string k = s.key(allow_swap);
  if (auto it = memo.find(k); it != memo.end()) return it->second;

  int best = n + 1;
  auto visit = [&](const HybridState& next) { best = std::min(best, hybrid_search(next, gold, allow_swap, memo)); };
  if (!s.buffer.empty()) {
    HybridState next = s;
    next.stack.push_back(s.buffer.front());
    next.buffer.erase(next.buffer.begin());
    visit(next);
  }
  if (!s.stack.empty() && !s.buffer.empty() && s.stack.back() != 0) {
    HybridState next = s;
    next.head[static_cast<size_t>(s.stack.back())] = s.buffer.front();
    next.stack.pop_back();
    visit(next);
  }
  if (s.stack.size() >= 2) {
    HybridState next = s;
    next.head[static_cast<size_t>(s.stack.back())] = s.stack[s.stack.size() - 2];
    next.stack.pop_back();
    visit(next);
  }
  if (allow_swap && !s.stack.empty() && !s.buffer.empty() && s.stack.back() > 0 &&
      s.stack.back() < s.buffer.front()) {
    HybridState next = s;
    next.buffer.insert(next.buffer.begin() + 1, s.stack.back());
    next.stack.pop_back();
    visit(next);
  }
  memo.emplace(std::move(k), best);
  return best;
}

}  // namespace

int brute_force_min_loss(const Configuration& c, const PlaneAssignment& pa, BruteForceCache* cache, int max_len) {
  const int n = c.sentence_length();
  if (n > max_len || n > kBruteForceHardLimit)
    throw std::invalid_argument("brute_force_min_loss: sentence length " + std::to_string(n) + " over bound");
  PlanarState s;
  s.n = n;
  s.front = c.buffer_front();
  s.active = c.active();
  s.last_switch = c.last_was_switch();
  for (int p = 0; p < 2; ++p)
    for (int v : c.stack(p)) s.stack[static_cast<size_t>(p)] |= static_cast<std::uint16_t>(1u << v);
  s.head.fill(-1);
  s.plane.fill(-1);
  for (int d = 1; d <= n; ++d) {
    if (!c.arcs().has_head(d)) continue;
    s.head[static_cast<size_t>(d)] = static_cast<std::int8_t>(c.arcs().head_of(d));
    s.plane[static_cast<size_t>(d)] = static_cast<std::int8_t>(c.plane_of(d));
  }
  BruteForceCache local;
  BruteForceCache& memo = cache ? *cache : local;
  int budget = certainly_lost(s, pa);
  while (!planar_within(s, pa, budget, memo.table_)) ++budget;
  return budget;
}

int hybrid_brute_force_min_loss(const HybridConfiguration& c, const DepGraph& gold, bool allow_swap,
                                BruteForceCache* cache, int max_len) {
  const int n = c.sentence_length();
  if (n > max_len || n > kBruteForceHardLimit)
    throw std::invalid_argument("hybrid_brute_force_min_loss: sentence length " + std::to_string(n) + " over bound");
  HybridState s;
  for (int v : c.stack()) s.stack.push_back(static_cast<std::int8_t>(v));
  for (int v : c.buffer()) s.buffer.push_back(static_cast<std::int8_t>(v));
  s.head.assign(static_cast<size_t>(n) + 1, -1);
  for (int d = 1; d <= n; ++d)
    if (c.arcs().has_head(d)) s.head[static_cast<size_t>(d)] = static_cast<std::int8_t>(c.arcs().head_of(d));
  BruteForceCache local;
  BruteForceCache& memo = cache ? *cache : local;
  return hybrid_search(s, gold, allow_swap, memo.string_table_);
}

}  // namespace twoplanar
