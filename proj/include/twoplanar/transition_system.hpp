// The 2-Planar transition system.
//
// A configuration holds two stacks tied to planes 1 and 2, a buffer, and the
// arcs built so far, each tagged with the plane it was built in. The
// artificial root is node 0 and starts at the front of the buffer, so root
// attachments are ordinary Right-Arc transitions from node 0.
//
//   Shift      pops the buffer front and pushes it onto both stacks.
//   Reduce     pops the active stack.
//   Left-Arc   adds (buffer front -> active top), tagged with the active plane.
//   Right-Arc  adds (active top -> buffer front), likewise.
//   Switch     exchanges the active and inactive stacks.
//
// Arc transitions respect single-head and acyclicity; two consecutive
// Switches are not allowed.
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoplanar/graph.hpp"
#include "twoplanar/transition.hpp"

namespace twoplanar {

class IllegalTransition : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Configuration {
 public:
  // Plane indices are 0 and 1 internally; user-facing text prints 1 and 2.
  static Configuration initial(int n);

  int sentence_length() const { return n_; }
  int node_count() const { return n_ + 1; }

  const std::vector<int>& stack(int plane) const { return stacks_[static_cast<size_t>(plane)]; }
  const std::vector<int>& active_stack() const { return stack(active_); }
  const std::vector<int>& inactive_stack() const { return stack(1 - active_); }
  int active() const { return active_; }
  bool last_was_switch() const { return last_was_switch_; }

  // Buffer is always the suffix [front, n] of the node sequence.
  int buffer_front() const { return front_; }
  bool buffer_empty() const { return front_ > n_; }
  bool in_buffer(int node) const { return node >= front_; }
  bool in_stack(int plane, int node) const;

  const ArcSet& arcs() const { return arcs_; }
  // Plane (0/1) the arc into dep was built in, or -1.
  int plane_of(int dep) const { return plane_[static_cast<size_t>(dep)]; }
  int label_of(int dep) const { return label_[static_cast<size_t>(dep)]; }
  bool has_arc(const Arc& a, int plane) const { return arcs_.contains(a) && plane_of(a.dep) == plane; }
  const UnionFind& wcc() const { return wcc_; }

  bool is_terminal() const { return buffer_empty(); }

  bool operator==(const Configuration& o) const;

  // Used by apply(); exposed for the oracle's in-place expansions.
  void apply_in_place(const Transition& t);

 private:
  int n_ = 0;
  std::vector<int> stacks_[2];
  std::vector<char> on_stack_[2];
  int active_ = 0;
  int front_ = 0;
  ArcSet arcs_;
  std::vector<int> plane_;
  std::vector<int> label_;
  UnionFind wcc_;
  bool last_was_switch_ = false;
};

Configuration initial_config(int n);

// Legal transition kinds; arc transitions are returned unlabeled.
std::vector<Transition> legal(const Configuration& c);
bool is_legal(const Configuration& c, const Transition& t);

Configuration apply(const Configuration& c, const Transition& t);

bool is_terminal(const Configuration& c);

// Heads from the built arcs; tokens left without a head are attached to 0
// with label "root". label_names maps label ids; unnamed ids print as "_".
DepGraph extract_parse(const Configuration& c, std::span<const std::string> label_names = {});

// "STEP k: <transition> | S1=[...] S2=[...] active=i B-front=w", describing
// the configuration the transition is applied to.
std::string trace_line(int step, const Transition& t, const Configuration& before,
                       std::span<const std::string> label_names = {});

}  // namespace twoplanar
