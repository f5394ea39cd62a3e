// Greedy decoding over either transition system.
#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "twoplanar/arc_hybrid.hpp"
#include "twoplanar/conll.hpp"
#include "twoplanar/features.hpp"
#include "twoplanar/model_archive.hpp"
#include "twoplanar/transition_system.hpp"

namespace twoplanar {

// A configuration of either system plus the modifier index the features
// need.
class ParserState {
 public:
  ParserState(System system, int n);

  System system() const { return system_; }
  int sentence_length() const;
  bool is_terminal() const;
  // Legal transition kinds (arc transitions unlabeled).
  std::vector<Transition> legal() const;
  bool is_legal(const Transition& t) const;
  // Throws IllegalTransition.
  void apply(const Transition& t);

  FeatureView features() const;
  // Dependent of the arc t would build, or -1 for non-arc transitions.
  int arc_dependent(const Transition& t) const;
  int arc_head(const Transition& t) const;

  DepGraph extract(std::span<const std::string> label_names = {}) const;
  // One line in the --trace format, describing this state before t.
  std::string trace_line(int step, const Transition& t, std::span<const std::string> label_names = {}) const;

  const Configuration& planar() const { return std::get<Configuration>(config_); }
  const HybridConfiguration& hybrid() const { return std::get<HybridConfiguration>(config_); }
  const Modifiers& modifiers() const { return mods_; }

 private:
  System system_;
  std::variant<Configuration, HybridConfiguration> config_;
  Modifiers mods_;
};

// Picks the legal action of highest score (ties go to the lowest index).
// scores covers the whole action space.
int best_legal_action(const ParserState& state, const ActionSpace& actions, const Eigen::VectorXf& scores);

using ActionScorer = std::function<Eigen::VectorXf(const ParserState&)>;

// Runs argmax-legal decoding to a terminal configuration. trace, when given,
// receives one line per transition.
DepGraph greedy_decode(System system, int n, const ActionSpace& actions, const ActionScorer& scorer,
                       std::span<const std::string> label_names = {}, std::vector<std::string>* trace = nullptr);

DepGraph greedy_parse(const Model& model, const Sentence& sentence, std::vector<std::string>* trace = nullptr);

// Copy of sentence with heads and labels taken from parse.
Sentence with_parse(Sentence sentence, const DepGraph& parse);

}  // namespace twoplanar
