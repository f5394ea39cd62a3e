// Static- and dynamic-oracle training with per-sentence hinge updates.
//
// Static: follow the canonical derivation; push its action above the best
// other legal action by a margin of 1.
// Dynamic: at every configuration take the zero-cost actions as correct
// (an arc action must also carry the gold label when it builds a gold arc);
// push the best correct action above the best incorrect one. From
// hp.explore_from on, a costly model prediction is followed with
// probability hp.explore_prob, otherwise the best correct action.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "twoplanar/conll.hpp"
#include "twoplanar/model_archive.hpp"

namespace twoplanar {

enum class OracleKind { Static, Dynamic };

struct TrainOptions {
  System system = System::TwoPlanar;
  OracleKind oracle = OracleKind::Dynamic;
  Hyperparams hp;
  std::string embeddings;  // optional pretrained form vectors
};

struct IterationReport {
  int iteration = 0;
  double loss = 0;       // summed hinge loss
  double train_uas = 0;  // UAS of the configurations' final parses during training
  double dev_uas = 0;
  long updates = 0;
  long explored = 0;  // transitions that left the zero-cost path
};

struct TrainResult {
  Model model;  // the iteration with the best dev UAS
  int best_iteration = 0;
  double best_dev_uas = -1;
  std::vector<IterationReport> history;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TrainResult train(const std::vector<Sentence>& train_set, const std::vector<Sentence>& dev_set,
                  const TrainOptions& opts, const std::function<void(const IterationReport&)>& on_iteration = {});

std::string_view oracle_name(OracleKind k);
OracleKind parse_oracle(std::string_view name);

}  // namespace twoplanar
