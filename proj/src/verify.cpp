#include "twoplanar/verify.hpp"

#include "twoplanar/arc_hybrid.hpp"
#include "twoplanar/brute_force.hpp"
#include "twoplanar/oracle.hpp"
#include "twoplanar/parser.hpp"
#include "twoplanar/treegen.hpp"

namespace twoplanar {

namespace {

std::string heads_text(const DepGraph& g) {
  std::string s = "gold heads [";
  for (int d = 1; d <= g.size(); ++d) s += (d > 1 ? "," : "") + std::to_string(g.heads[static_cast<size_t>(d)]);
  return s + "]";
}

void fail(VerifyReport& rep, const DepGraph& gold, const std::vector<std::string>& trace, const std::string& what) {
  ++rep.mismatches;
  if (!rep.counterexample.empty()) return;
  rep.counterexample.push_back(heads_text(gold));
  rep.counterexample.insert(rep.counterexample.end(), trace.begin(), trace.end());
  rep.counterexample.push_back(what);
}

// Checks one 2-Planar configuration; returns false on a mismatch.
bool check_planar(const Configuration& c, const PlaneAssignment& pa, BruteForceCache& cache, int max_len,
                  std::string& why) {
  const int best = brute_force_min_loss(c, pa, &cache, max_len);
  const int l = loss(c, pa).total;
  if (l != best) {
    why = "loss " + std::to_string(l) + " but minimum reachable loss " + std::to_string(best);
    return false;
  }
  const TransitionCosts costs = transition_costs(c, pa);
  if (costs.zero_cost.empty()) {
    why = "empty zero-cost set";
    return false;
  }
  for (size_t i = 0; i < costs.transitions.size(); ++i) {
    const Transition& t = costs.transitions[i];
    const int after = brute_force_min_loss(apply(c, t), pa, &cache, max_len);
    if (costs.costs[i] != after - best) {
      why = "cost of " + to_string(t) + " is " + std::to_string(costs.costs[i]) + ", exhaustive delta " +
            std::to_string(after - best);
      return false;
    }
  }
  return true;
}

}  // namespace

VerifyReport verify_twoplanar(const VerifyOptions& opts) {
  VerifyReport rep;
  Rng rng(opts.seed);
  while (rep.configurations < opts.samples) {
    const int n = uniform_int(rng, 1, opts.max_len);
    // alternate unfiltered trees (loss checks) and 2-planar ones (zero-loss walks)
    const bool planar_only = rep.trees % 2 == 1;
    const DepGraph gold = planar_only ? random_two_planar_tree(n, rng) : random_tree(n, rng);
    ++rep.trees;
    const PlaneAssignment pa = assign_planes(gold);
    BruteForceCache cache;

    Configuration c = initial_config(n);
    std::vector<std::string> trace;
    for (int step = 1; !c.is_terminal() && rep.configurations < opts.samples; ++step) {
      ++rep.configurations;
      std::string why;
      if (!check_planar(c, pa, cache, opts.max_len, why)) {
        fail(rep, gold, trace, why);
        break;
      }
      const auto moves = legal(c);
      const Transition t = moves[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(moves.size()) - 1))];
      trace.push_back(trace_line(step, t, c));
      c.apply_in_place(t);
    }

    if (!planar_only) continue;
    ++rep.walks;
    c = initial_config(n);
    trace.clear();
    for (int step = 1; !c.is_terminal(); ++step) {
      const TransitionCosts costs = transition_costs(c, pa);
      if (costs.zero_cost.empty()) {
        fail(rep, gold, trace, "zero-cost walk stuck: empty zero-cost set");
        break;
      }
      const Transition t =
          costs.zero_cost[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(costs.zero_cost.size()) - 1))];
      trace.push_back(trace_line(step, t, c));
      c.apply_in_place(t);
    }
    if (!c.is_terminal()) continue;
    for (int d = 1; d <= n; ++d) {
      const int p = pa.plane(d);
      const bool built = c.arcs().head_of(d) == pa.gold_head(d) && c.plane_of(d) == p;
      if (p < 0 || !built) {
        fail(rep, gold, trace, "zero-cost walk ended without gold arc into " + std::to_string(d) + " in plane " +
                                   std::to_string(p + 1));
        break;
      }
    }
  }
  return rep;
}

VerifyReport verify_hybrid(const VerifyOptions& opts) {
  VerifyReport rep;
  Rng rng(opts.seed);
  while (rep.configurations < opts.samples) {
    const int n = uniform_int(rng, 1, opts.max_len);
    ++rep.trees;
    {
      const DepGraph gold = random_projective_tree(n, rng);
      BruteForceCache cache;
      HybridConfiguration c = hybrid_initial(n);
      const ProjectiveOrder po = projective_order(gold);
      ParserState shown(System::HybridSwap, n);
      std::vector<std::string> trace;
      for (int step = 1; !c.is_terminal() && rep.configurations < opts.samples; ++step) {
        ++rep.configurations;
        const int best = hybrid_brute_force_min_loss(c, gold, false, &cache, opts.max_len);
        const TransitionCosts costs = hybrid_oracle(c, gold, po);
        std::string why;
        for (size_t i = 0; i < costs.transitions.size() && why.empty(); ++i) {
          const Transition& t = costs.transitions[i];
          if (t.kind == Kind::Swap) continue;
          const int after = hybrid_brute_force_min_loss(hybrid_apply(c, t), gold, false, &cache, opts.max_len);
          if (costs.costs[i] != after - best)
            why = "cost of " + to_string(t) + " is " + std::to_string(costs.costs[i]) + ", exhaustive delta " +
                  std::to_string(after - best);
        }
        if (!why.empty()) {
          fail(rep, gold, trace, why);
          break;
        }
        std::vector<Transition> moves;
        for (const Transition& t : hybrid_legal(c))
          if (t.kind != Kind::Swap) moves.push_back(t);
        const Transition t = moves[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(moves.size()) - 1))];
        trace.push_back(shown.trace_line(step, t));
        shown.apply(t);
        c.apply_in_place(t);
      }
    }
    {
      const DepGraph gold = random_tree(n, rng);
      const ProjectiveOrder po = projective_order(gold);
      ++rep.walks;
      ParserState st(System::HybridSwap, n);
      std::vector<std::string> trace;
      bool stuck = false;
      for (int step = 1; !st.is_terminal(); ++step) {
        const TransitionCosts costs = hybrid_oracle(st.hybrid(), gold, po);
        if (costs.zero_cost.empty()) {
          fail(rep, gold, trace, "zero-cost walk stuck: empty zero-cost set");
          stuck = true;
          break;
        }
        const Transition t =
            costs.zero_cost[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(costs.zero_cost.size()) - 1))];
        trace.push_back(st.trace_line(step, t));
        st.apply(t);
      }
      if (!stuck && hamming_loss(st.extract(), gold) != 0)
        fail(rep, gold, trace, "zero-cost walk ended with Hamming loss " +
                                   std::to_string(hamming_loss(st.extract(), gold)));
    }
  }
  return rep;
}

VerifyReport verify_oracle(System system, const VerifyOptions& opts) {
  return system == System::TwoPlanar ? verify_twoplanar(opts) : verify_hybrid(opts);
}

}  // namespace twoplanar
