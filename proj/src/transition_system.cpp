#include "twoplanar/transition_system.hpp"

#include <sstream>

namespace twoplanar {

std::string_view system_name(System s) { return s == System::TwoPlanar ? "2planar" : "hybrid-swap"; }

System parse_system(std::string_view name) {
  if (name == "2planar") return System::TwoPlanar;
  if (name == "hybrid-swap") return System::HybridSwap;
  throw std::invalid_argument("unknown system: " + std::string(name));
}

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Shift: return "SHIFT";
    case Kind::Reduce: return "REDUCE";
    case Kind::LeftArc: return "LEFT-ARC";
    case Kind::RightArc: return "RIGHT-ARC";
    case Kind::Switch: return "SWITCH";
    case Kind::Swap: return "SWAP";
  }
  return "?";
}

std::string to_string(const Transition& t) {
  std::string s(kind_name(t.kind));
  if (t.is_arc() && t.label >= 0) s += "(" + std::to_string(t.label) + ")";
  return s;
}

Configuration Configuration::initial(int n) {
  if (n < 1) throw std::invalid_argument("initial_config: empty sentence");
  Configuration c;
  c.n_ = n;
  for (auto& s : c.stacks_) s.reserve(static_cast<size_t>(n) + 1);
  for (auto& m : c.on_stack_) m.assign(static_cast<size_t>(n) + 1, 0);
  c.front_ = 0;
  c.arcs_ = ArcSet(n);
  c.plane_.assign(static_cast<size_t>(n) + 1, -1);
  c.label_.assign(static_cast<size_t>(n) + 1, -1);
  c.wcc_ = UnionFind(n + 1);
  return c;
}

bool Configuration::in_stack(int plane, int node) const {
  return on_stack_[static_cast<size_t>(plane)][static_cast<size_t>(node)] != 0;
}

bool Configuration::operator==(const Configuration& o) const {
  return n_ == o.n_ && stacks_[0] == o.stacks_[0] && stacks_[1] == o.stacks_[1] &&
         active_ == o.active_ && front_ == o.front_ && arcs_ == o.arcs_ && plane_ == o.plane_ &&
         label_ == o.label_ && last_was_switch_ == o.last_was_switch_;
}

void Configuration::apply_in_place(const Transition& t) {
  if (!is_legal(*this, t)) throw IllegalTransition("illegal transition " + to_string(t));
  auto& st = stacks_[static_cast<size_t>(active_)];
  switch (t.kind) {
    case Kind::Shift:
      for (size_t p = 0; p < 2; ++p) {
        stacks_[p].push_back(front_);
        on_stack_[p][static_cast<size_t>(front_)] = 1;
      }
      ++front_;
      break;
    case Kind::Reduce:
      on_stack_[static_cast<size_t>(active_)][static_cast<size_t>(st.back())] = 0;
      st.pop_back();
      break;
    case Kind::LeftArc:
    case Kind::RightArc: {
      Arc a = t.kind == Kind::LeftArc ? Arc{front_, st.back()} : Arc{st.back(), front_};
      arcs_.add(a);
      plane_[static_cast<size_t>(a.dep)] = active_;
      label_[static_cast<size_t>(a.dep)] = t.label;
      add_arc_wcc(wcc_, a);
      break;
    }
    case Kind::Switch:
      active_ = 1 - active_;
      break;
    case Kind::Swap:
      break;  // unreachable: rejected by is_legal
  }
  last_was_switch_ = t.kind == Kind::Switch;
}

Configuration initial_config(int n) { return Configuration::initial(n); }

bool is_legal(const Configuration& c, const Transition& t) {
  if (c.is_terminal()) return false;
  const auto& st = c.active_stack();
  const int b = c.buffer_front();
  switch (t.kind) {
    case Kind::Shift:
      return true;
    case Kind::Reduce:
      return !st.empty();
    case Kind::LeftArc: {
      if (st.empty()) return false;
      const int s = st.back();
      // node 0 is never a dependent
      return s != 0 && !c.arcs().has_head(s) && !same_wcc(c.wcc(), s, b);
    }
    case Kind::RightArc: {
      if (st.empty()) return false;
      const int s = st.back();
      return !c.arcs().has_head(b) && !same_wcc(c.wcc(), s, b);
    }
    case Kind::Switch:
      return !c.last_was_switch();
    case Kind::Swap:
      return false;
  }
  return false;
}

std::vector<Transition> legal(const Configuration& c) {
  if (c.is_terminal()) throw std::logic_error("legal: terminal configuration");
  std::vector<Transition> out;
  for (Transition t : {shift(), reduce(), left_arc(), right_arc(), switch_planes()})
    if (is_legal(c, t)) out.push_back(t);
  return out;
}

Configuration apply(const Configuration& c, const Transition& t) {
  Configuration next = c;
  next.apply_in_place(t);
  return next;
}

bool is_terminal(const Configuration& c) { return c.is_terminal(); }

DepGraph extract_parse(const Configuration& c, std::span<const std::string> label_names) {
  if (!c.is_terminal()) throw std::logic_error("extract_parse: configuration is not terminal");
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

namespace {

void print_stack(std::ostream& os, const std::vector<int>& s) {
  os << '[';
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
}

}  // namespace

std::string trace_line(int step, const Transition& t, const Configuration& before,
                       std::span<const std::string> label_names) {
  std::ostringstream os;
  os << "STEP " << step << ": " << kind_name(t.kind);
  if (t.is_arc() && t.label >= 0) {
    if (static_cast<size_t>(t.label) < label_names.size())
      os << '(' << label_names[static_cast<size_t>(t.label)] << ')';
    else
      os << '(' << t.label << ')';
  }
  os << " | S1=";
  print_stack(os, before.stack(0));
  os << " S2=";
  print_stack(os, before.stack(1));
  os << " active=" << before.active() + 1 << " B-front=";
  if (before.buffer_empty())
    os << '-';
  else
    os << before.buffer_front();
  return os.str();
}

}  // namespace twoplanar
