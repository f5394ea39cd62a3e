#include "twoplanar/arc_hybrid.hpp"

#include <stdexcept>

#include "twoplanar/transition_system.hpp"

namespace twoplanar {

HybridConfiguration HybridConfiguration::initial(int n) {
  if (n < 1) throw std::invalid_argument("hybrid_initial: empty sentence");
  HybridConfiguration c;
  c.n_ = n;
  c.stack_.reserve(static_cast<size_t>(n) + 1);
  for (int i = n; i >= 0; --i) c.buffer_rev_.push_back(i);
  c.arcs_ = ArcSet(n);
  c.label_.assign(static_cast<size_t>(n) + 1, -1);
  return c;
}

HybridConfiguration hybrid_initial(int n) { return HybridConfiguration::initial(n); }

bool hybrid_is_legal(const HybridConfiguration& c, const Transition& t) {
  const auto& st = c.stack();
  switch (t.kind) {
    case Kind::Shift:
      return !c.buffer_empty();
    case Kind::LeftArc:
      return !st.empty() && !c.buffer_empty() && st.back() != 0;
    case Kind::RightArc:
      return st.size() >= 2;
    case Kind::Swap:
      return !st.empty() && !c.buffer_empty() && st.back() > 0 && st.back() < c.buffer_front();
    case Kind::Reduce:
    case Kind::Switch:
      return false;
  }
  return false;
}

std::vector<Transition> hybrid_legal(const HybridConfiguration& c) {
  if (c.is_terminal()) throw std::logic_error("hybrid_legal: terminal configuration");
  std::vector<Transition> out;
  for (Transition t : {shift(), left_arc(), right_arc(), swap()})
    if (hybrid_is_legal(c, t)) out.push_back(t);
  return out;
}

void HybridConfiguration::apply_in_place(const Transition& t) {
  if (!hybrid_is_legal(*this, t)) throw IllegalTransition("illegal transition " + to_string(t));
  switch (t.kind) {
    case Kind::Shift:
      stack_.push_back(buffer_rev_.back());
      buffer_rev_.pop_back();
      break;
    case Kind::LeftArc:
    case Kind::RightArc: {
      const int dep = stack_.back();
      const int head = t.kind == Kind::LeftArc ? buffer_rev_.back() : stack_[stack_.size() - 2];
      arcs_.add({head, dep});
      label_[static_cast<size_t>(dep)] = t.label;
      stack_.pop_back();
      break;
    }
    case Kind::Swap:
      buffer_rev_.insert(buffer_rev_.end() - 1, stack_.back());
      stack_.pop_back();
      ++swaps_;
      break;
    case Kind::Reduce:
    case Kind::Switch:
      break;
  }
}

HybridConfiguration hybrid_apply(const HybridConfiguration& c, const Transition& t) {
  HybridConfiguration next = c;
  next.apply_in_place(t);
  return next;
}

DepGraph hybrid_extract_parse(const HybridConfiguration& c, std::span<const std::string> label_names) {
  if (!c.is_terminal()) throw std::logic_error("hybrid_extract_parse: configuration is not terminal");
  const int n = c.sentence_length();
  DepGraph g(n);
  for (int d = 1; d <= n; ++d) {
    auto di = static_cast<size_t>(d);
    if (c.arcs().has_head(d)) {
      g.heads[di] = c.arcs().head_of(d);
      int l = c.label_of(d);
      g.labels[di] = l >= 0 && static_cast<size_t>(l) < label_names.size() ? label_names[static_cast<size_t>(l)] : "_";
    } else {
      g.heads[di] = 0;
      g.labels[di] = "root";
    }
  }
  return g;
}

ProjectiveOrder projective_order(const DepGraph& gold) {
  const int n = gold.size();
  std::vector<std::vector<int>> children(static_cast<size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) {
    int h = gold.heads[static_cast<size_t>(d)];
    if (h < 0 || h > n) throw std::invalid_argument("projective_order: head out of range");
    children[static_cast<size_t>(h)].push_back(d);
  }
  ProjectiveOrder rank(static_cast<size_t>(n) + 1, -1);
  int next = 0;
  // iterative in-order walk; frame = (node, index of next child to visit)
  std::vector<std::pair<int, size_t>> frames{{0, 0}};
  while (!frames.empty()) {
    auto& [node, i] = frames.back();
    const auto& kids = children[static_cast<size_t>(node)];
    if (i < kids.size() && kids[i] < node) {
      frames.push_back({kids[i++], 0});
      continue;
    }
    if (rank[static_cast<size_t>(node)] == -1) rank[static_cast<size_t>(node)] = next++;
    if (i < kids.size()) {
      frames.push_back({kids[i++], 0});
      continue;
    }
    frames.pop_back();
  }
  if (next != n + 1) throw std::invalid_argument("projective_order: gold graph is not a tree rooted at 0");
  return rank;
}

TransitionCosts hybrid_oracle(const HybridConfiguration& c, const DepGraph& gold, const ProjectiveOrder& po) {
  if (c.is_terminal()) throw std::logic_error("hybrid_oracle: terminal configuration");
  TransitionCosts out;
  const auto& st = c.stack();
  const auto& heads = gold.heads;
  auto head = [&](int d) { return heads[static_cast<size_t>(d)]; };

  if (hybrid_is_legal(c, swap()) &&
      po[static_cast<size_t>(st.back())] > po[static_cast<size_t>(c.buffer_front())]) {
    out.transitions = {swap()};
    out.costs = {0};
    out.zero_cost = {swap()};
    return out;
  }

  const auto& buf = c.buffer_reversed();
  // The front is "unsettled" when a later buffer node precedes it in
  // projective order: it will be swapped back, so it is shifted through.
  bool unsettled = false;
  for (int b : buf)
    if (po[static_cast<size_t>(b)] < po[static_cast<size_t>(c.buffer_front())]) unsettled = true;
  std::vector<char> in_buffer(static_cast<size_t>(c.sentence_length()) + 1, 0);
  std::vector<char> in_stack(in_buffer.size(), 0);
  for (int b : buf) in_buffer[static_cast<size_t>(b)] = 1;
  for (int s : st) in_stack[static_cast<size_t>(s)] = 1;

  auto deps_in = [&](int h, const std::vector<char>& where) {
    int k = 0;
    for (int d = 1; d <= c.sentence_length(); ++d)
      if (where[static_cast<size_t>(d)] && head(d) == h) ++k;
    return k;
  };

  for (const Transition& t : hybrid_legal(c)) {
    if (t.kind == Kind::Swap) continue;
    int cost = 0;
    if (t.kind == Kind::Shift) {
      const int b = c.buffer_front();
      cost = deps_in(b, in_stack);
      const int h = head(b);
      if (h >= 0 && in_stack[static_cast<size_t>(h)] && (st.empty() || h != st.back())) ++cost;
    } else {
      const int s = st.back();
      cost = deps_in(s, in_buffer);
      const int h = head(s);
      if (t.kind == Kind::LeftArc) {
        const bool second = st.size() >= 2 && h == st[st.size() - 2];
        const bool later_buffer = h >= 0 && in_buffer[static_cast<size_t>(h)] && h != c.buffer_front();
        if (second || later_buffer) ++cost;
      } else if (h >= 0 && in_buffer[static_cast<size_t>(h)]) {
        ++cost;
      }
    }
    if (unsettled) cost = t.kind == Kind::Shift ? 0 : std::max(cost, 1);
    out.transitions.push_back(t);
    out.costs.push_back(cost);
    if (cost == 0) out.zero_cost.push_back(t);
  }
  return out;
}

Transition hybrid_static_oracle(const HybridConfiguration& c, const DepGraph& gold, const ProjectiveOrder& po) {
  const TransitionCosts costs = hybrid_oracle(c, gold, po);
  for (Kind k : {Kind::Swap, Kind::LeftArc, Kind::RightArc, Kind::Shift})
    if (costs.is_zero_cost(k)) return {k, -1};
  throw std::logic_error("hybrid_static_oracle: no zero-cost transition");
}

}  // namespace twoplanar
