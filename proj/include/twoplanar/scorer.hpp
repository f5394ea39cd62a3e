// Transition scorer: embeddings of the feature positions, an optional
// bidirectional Elman RNN over the sentence, one tanh hidden layer and a
// linear output with one score per (transition, label) action.
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "twoplanar/conll.hpp"
#include "twoplanar/features.hpp"
#include "twoplanar/treegen.hpp"

namespace twoplanar {

class Vocab {
 public:
  // Reserved ids for the NULL slot, unknown items and the artificial root.
  static constexpr int kNull = 0, kUnk = 1, kRoot = 2;

  // with_specials: start with the three reserved entries.
  explicit Vocab(bool with_specials = true);
  int add(const std::string& item);
  int id(const std::string& item) const;  // kUnk (or -1 without specials) if missing
  const std::string& item(int id) const { return items_.at(static_cast<size_t>(id)); }
  int size() const { return static_cast<int>(items_.size()); }
  const std::vector<std::string>& items() const { return items_; }

  bool operator==(const Vocab& o) const { return items_ == o.items_; }

 private:
  std::vector<std::string> items_;
  std::unordered_map<std::string, int> index_;
  bool specials_;
};

struct Hyperparams {
  int form_dim = 32;
  int pos_dim = 16;
  int hidden = 128;
  int rnn_dim = 0;  // 0 disables the recurrent encoder
  double learning_rate = 0.01;
  double explore_prob = 0.9;
  int explore_from = 2;  // first iteration (1-based) with exploration
  int iterations = 15;
  std::uint64_t seed = 1;

  bool operator==(const Hyperparams&) const = default;
};

// Action space: Shift, Reduce, Switch (2-Planar) or Shift, Swap (hybrid),
// then Left-Arc and Right-Arc for every label.
class ActionSpace {
 public:
  ActionSpace(System system, int labels);
  int size() const { return static_cast<int>(actions_.size()); }
  const Transition& at(int i) const { return actions_[static_cast<size_t>(i)]; }
  int index(const Transition& t) const;  // -1 if not in the space
  int labels() const { return labels_; }

 private:
  std::vector<Transition> actions_;
  int base_ = 0;
  int labels_ = 0;
  int unlabeled_[kNumKinds];
};

// Token ids of a sentence, node 0 being the root.
struct EncodedSentence {
  std::vector<int> form, pos;
};

class Scorer {
 public:
  struct Tensor {
    std::string name;
    Eigen::MatrixXf value;
  };

  Scorer() = default;
  Scorer(const Hyperparams& hp, int slots, int form_vocab, int pos_vocab, int actions, Rng& rng);

  int slots() const { return slots_; }
  int actions() const { return static_cast<int>(W2().rows()); }
  bool has_encoder() const { return rnn_dim_ > 0; }
  int rnn_dim() const { return rnn_dim_; }
  int input_dim() const;

  // Contextual vectors, one column per node (+ hidden states for backprop).
  struct Context {
    Eigen::MatrixXf tok;                // raw token vectors, one column per node
    Eigen::MatrixXf fwd, bwd;           // RNN states
  };
  Context encode(const EncodedSentence& s) const;

  struct StepCache {
    Eigen::VectorXf x, h;
    std::vector<int> slots;
  };
  Eigen::VectorXf score(const EncodedSentence& s, const Context& ctx, const FeatureView& fv,
                        StepCache* cache = nullptr) const;

  // Gradient accumulator with the same layout as tensors().
  struct Gradient {
    std::vector<Eigen::MatrixXf> g;
    Eigen::MatrixXf dctx;  // gradient w.r.t. contextual vectors (encoder only)
  };
  Gradient zero_gradient(int sentence_nodes) const;
  // Adds d(score . dscores)/d(params) for one step.
  void backward(const EncodedSentence& s, const StepCache& cache, const Eigen::VectorXf& dscores,
                Gradient& grad) const;
  // Backpropagates dctx through the encoder; call once per sentence.
  void backward_encoder(const EncodedSentence& s, const Context& ctx, Gradient& grad) const;
  void sgd_step(const Gradient& grad, float learning_rate);

  std::vector<Tensor>& tensors() { return tensors_; }
  const std::vector<Tensor>& tensors() const { return tensors_; }
  // Rebuilds derived sizes after tensors were replaced (archive loading).
  void restore(int slots, int rnn_dim);

  // Overwrites the form embedding of one vocabulary entry.
  void set_form_vector(int id, const Eigen::VectorXf& v);
  int form_dim() const { return static_cast<int>(tensors_[kFormEmb].value.rows()); }

  bool operator==(const Scorer& o) const;

 private:
  enum : size_t { kFormEmb, kPosEmb, kW1, kB1, kW2, kB2, kNullCtx, kFx, kFh, kFb, kBx, kBh, kBb };

  const Eigen::MatrixXf& W2() const { return tensors_[kW2].value; }
  int ctx_dim() const;
  Eigen::VectorXf slot_vector(const Context& ctx, int node) const;

  std::vector<Tensor> tensors_;
  int slots_ = 0;
  int rnn_dim_ = 0;
};

}  // namespace twoplanar
