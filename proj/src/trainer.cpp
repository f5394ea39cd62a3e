#include "twoplanar/trainer.hpp"

#include <cmath>
#include <numeric>

#include "twoplanar/eval.hpp"
#include "twoplanar/oracle.hpp"
#include "twoplanar/parser.hpp"

namespace twoplanar {

std::string_view oracle_name(OracleKind k) { return k == OracleKind::Static ? "static" : "dynamic"; }

OracleKind parse_oracle(std::string_view name) {
  if (name == "static") return OracleKind::Static;
  if (name == "dynamic") return OracleKind::Dynamic;
  throw std::invalid_argument("unknown oracle: " + std::string(name));
}

namespace {

struct GoldInfo {
  DepGraph tree;
  std::vector<int> label_ids;
  PlaneAssignment planes;  // 2-Planar
  ProjectiveOrder order;   // hybrid
};

GoldInfo gold_info(const Model& m, const Sentence& s) {
  GoldInfo g;
  g.tree = DepGraph(s.size());
  g.label_ids.assign(static_cast<size_t>(s.size()) + 1, -1);
  for (const Token& t : s.tokens) {
    g.tree.heads[static_cast<size_t>(t.id)] = t.head;
    g.tree.labels[static_cast<size_t>(t.id)] = t.deprel;
    g.label_ids[static_cast<size_t>(t.id)] = m.labels.id(t.deprel);
  }
  if (m.system == System::TwoPlanar)
    g.planes = assign_planes(g.tree);
  else
    g.order = projective_order(g.tree);
  return g;
}

// Unlabeled kinds the oracle accepts in this state.
std::vector<Kind> correct_kinds(const ParserState& st, const GoldInfo& g, OracleKind oracle) {
  if (oracle == OracleKind::Static) {
    Transition t = st.system() == System::TwoPlanar ? static_oracle(st.planar(), g.planes)
                                                    : hybrid_static_oracle(st.hybrid(), g.tree, g.order);
    return {t.kind};
  }
  TransitionCosts costs = st.system() == System::TwoPlanar ? transition_costs(st.planar(), g.planes)
                                                           : hybrid_oracle(st.hybrid(), g.tree, g.order);
  std::vector<Kind> kinds;
  for (const Transition& t : costs.zero_cost) kinds.push_back(t.kind);
  if (kinds.empty() && !costs.costs.empty()) {
    // Off the exact region of an approximate oracle: take the cheapest moves.
    const int best = *std::min_element(costs.costs.begin(), costs.costs.end());
    for (size_t i = 0; i < costs.costs.size(); ++i)
      if (costs.costs[i] == best) kinds.push_back(costs.transitions[i].kind);
  }
  return kinds;
}

int argmax(const Eigen::VectorXf& scores, const std::vector<int>& candidates) {
  int best = -1;
  for (int a : candidates)
    if (best < 0 || scores[a] > scores[best]) best = a;
  return best;
}

}  // namespace

TrainResult train(const std::vector<Sentence>& train_set, const std::vector<Sentence>& dev_set,
                  const TrainOptions& opts, const std::function<void(const IterationReport&)>& on_iteration) {
  if (train_set.empty()) throw TrainingError("empty training set");
  if (dev_set.empty()) throw TrainingError("empty development set");
  const Hyperparams& hp = opts.hp;

  Model model = make_model(opts.system, hp, train_set);
  if (!opts.embeddings.empty()) load_embeddings(model, opts.embeddings);
  const ActionSpace actions = model.actions();

  std::vector<GoldInfo> gold;
  gold.reserve(train_set.size());
  for (const Sentence& s : train_set) gold.push_back(gold_info(model, s));

  Rng rng(hp.seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), size_t{0});

  TrainResult result;
  for (int iter = 1; iter <= hp.iterations; ++iter) {
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1))]);
    const bool exploring = opts.oracle == OracleKind::Dynamic && iter >= hp.explore_from;

    IterationReport rep;
    rep.iteration = iter;
    long heads_right = 0, tokens = 0;
    for (size_t idx : order) {
      const Sentence& sent = train_set[idx];
      const GoldInfo& g = gold[idx];
      const EncodedSentence enc = model.encode(sent);
      const Scorer::Context ctx = model.scorer.encode(enc);
      Scorer::Gradient grad = model.scorer.zero_gradient(sent.size() + 1);
      Scorer::StepCache cache;
      Eigen::VectorXf dscores = Eigen::VectorXf::Zero(actions.size());
      bool any_update = false;

      ParserState st(opts.system, sent.size());
      while (!st.is_terminal()) {
        const Eigen::VectorXf scores = model.scorer.score(enc, ctx, st.features(), &cache);
        const std::vector<Kind> ok_kinds = correct_kinds(st, g, opts.oracle);
        std::vector<int> correct, wrong;
        bool legal_kind[kNumKinds] = {}, ok_kind[kNumKinds] = {};
        for (const Transition& t : st.legal()) legal_kind[static_cast<int>(t.kind)] = true;
        for (Kind k : ok_kinds) ok_kind[static_cast<int>(k)] = true;
        for (int a = 0; a < actions.size(); ++a) {
          const Transition& t = actions.at(a);
          if (!legal_kind[static_cast<int>(t.kind)]) continue;
          bool ok = ok_kind[static_cast<int>(t.kind)];
          if (ok && t.is_arc()) {
            const int dep = st.arc_dependent(t);
            const bool gold_arc = g.tree.heads[static_cast<size_t>(dep)] == st.arc_head(t);
            if (gold_arc || opts.oracle == OracleKind::Static)
              ok = t.label == g.label_ids[static_cast<size_t>(dep)];
          }
          (ok ? correct : wrong).push_back(a);
        }
        if (correct.empty()) throw TrainingError("oracle produced no action for a training configuration");

        const int best_ok = argmax(scores, correct);
        const int best_bad = argmax(scores, wrong);
        if (best_bad >= 0 && scores[best_bad] + 1.0f > scores[best_ok]) {
          const double l = 1.0 + scores[best_bad] - scores[best_ok];
          if (!std::isfinite(l))
            throw TrainingError("non-finite loss in iteration " + std::to_string(iter) + ", sentence " +
                                std::to_string(idx + 1));
          rep.loss += l;
          ++rep.updates;
          dscores[best_ok] = -1.0f;
          dscores[best_bad] = 1.0f;
          model.scorer.backward(enc, cache, dscores, grad);
          dscores[best_ok] = dscores[best_bad] = 0.0f;
          any_update = true;
        }

        int next = best_ok;
        if (opts.oracle == OracleKind::Dynamic) {
          const int predicted = best_legal_action(st, actions, scores);
          const bool predicted_ok = std::find(correct.begin(), correct.end(), predicted) != correct.end();
          if (predicted_ok) {
            next = predicted;
          } else if (exploring && uniform_real(rng) < hp.explore_prob) {
            next = predicted;
            ++rep.explored;
          }
        }
        st.apply(actions.at(next));
      }
      if (any_update) {
        model.scorer.backward_encoder(enc, ctx, grad);
        model.scorer.sgd_step(grad, static_cast<float>(hp.learning_rate));
      }
      const DepGraph out = st.extract();
      tokens += sent.size();
      heads_right += sent.size() - hamming_loss(out, g.tree);
    }
    rep.train_uas = tokens ? 100.0 * static_cast<double>(heads_right) / static_cast<double>(tokens) : 0.0;

    std::vector<Sentence> parsed;
    parsed.reserve(dev_set.size());
    for (const Sentence& s : dev_set) parsed.push_back(with_parse(s, greedy_parse(model, s)));
    rep.dev_uas = evaluate(parsed, dev_set, false).uas;
    result.history.push_back(rep);
    if (rep.dev_uas > result.best_dev_uas) {
      result.best_dev_uas = rep.dev_uas;
      result.best_iteration = iter;
      result.model = model;
    }
    if (on_iteration) on_iteration(rep);
  }
  return result;
}

}  // namespace twoplanar
