#include "twoplanar/treegen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twoplanar {

int uniform_int(Rng& rng, int lo, int hi) {
  const auto range = static_cast<unsigned __int128>(hi - lo + 1);
  return lo + static_cast<int>((static_cast<unsigned __int128>(rng()) * range) >> 64);
}

double uniform_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

DepGraph random_tree(int n, Rng& rng) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(uniform_int(rng, 0, i))]);
  DepGraph g(n);
  std::vector<int> attached{0};
  for (int d : order) {
    g.heads[static_cast<size_t>(d)] = attached[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(attached.size()) - 1))];
    g.labels[static_cast<size_t>(d)] = "dep";
    attached.push_back(d);
  }
  return g;
}

namespace {

template <typename Pred>
DepGraph sample_until(int n, Rng& rng, Pred pred) {
  while (true) {
    DepGraph g = random_tree(n, rng);
    if (pred(g)) return g;
  }
}

}  // namespace

DepGraph random_two_planar_tree(int n, Rng& rng) {
  return sample_until(n, rng, [](const DepGraph& g) { return is_two_planar(g.arcs()); });
}

DepGraph random_projective_tree(int n, Rng& rng) {
  return sample_until(n, rng, [](const DepGraph& g) { return is_noncrossing(g.arcs()); });
}

DepGraph random_non_projective_tree(int n, Rng& rng) {
  if (n < 3) throw std::invalid_argument("random_non_projective_tree: needs n >= 3");
  return sample_until(n, rng, [](const DepGraph& g) { return !is_noncrossing(g.arcs()); });
}

std::vector<Arc> random_functional_graph(int nodes, Rng& rng) {
  std::vector<Arc> arcs;
  for (int d = 0; d < nodes; ++d) {
    int h = uniform_int(rng, -1, nodes - 2);
    if (h < 0) continue;
    if (h >= d) ++h;  // skip self
    arcs.push_back({h, d});
  }
  return arcs;
}

namespace {

struct GNode {
  std::string form, pos, label;
  std::vector<int> left, right;
};

class Grammar {
 public:
  Grammar(Rng& rng, double extraposition) : rng_(rng), extraposition_(extraposition) {}

  Sentence sentence() {
    nodes_.clear();
    int verb = clause(0, /*relative=*/false);
    if (chance(0.12)) {
      // clausal coordination: ", and <clause>"
      attach(verb, &GNode::right, leaf(",", "PUNCT", "punct"));
      attach(verb, &GNode::right, leaf("and", "CONJ", "cc"));
      int second = clause(1, false);
      nodes_[static_cast<size_t>(second)].label = "conj";
      nodes_[static_cast<size_t>(verb)].right.push_back(second);
    }
    attach(verb, &GNode::right, leaf(".", "PUNCT", "punct"));
    nodes_[static_cast<size_t>(verb)].label = "root";
    return linearize(verb);
  }

 private:
  bool chance(double p) { return uniform_real(rng_) < p; }

  // Zipf-like pick of word index in [0, size).
  int zipf(int size) {
    double u = uniform_real(rng_);
    return std::min(size - 1, static_cast<int>(size * u * u * u));
  }

  int leaf(std::string form, std::string pos, std::string label) {
    nodes_.push_back({std::move(form), std::move(pos), std::move(label), {}, {}});
    return static_cast<int>(nodes_.size()) - 1;
  }

  int word(const char* prefix, int vocab, const char* pos, const char* label) {
    return leaf(prefix + std::to_string(zipf(vocab)), pos, label);
  }

  GNode& at(int i) { return nodes_[static_cast<size_t>(i)]; }

  // Takes the child id by value: creating the child may reallocate nodes_.
  void attach(int head, std::vector<int> GNode::*side, int child) { (at(head).*side).push_back(child); }

  int noun_phrase(int depth, const char* label) {
    if (chance(0.12)) return word("pr", 5, "PRON", label);
    int noun = word("n", 80, "NOUN", label);
    if (chance(0.8)) attach(noun, &GNode::left, word("d", 4, "DET", "det"));
    int adjs = chance(0.35) ? (chance(0.3) ? 2 : 1) : 0;
    for (int i = 0; i < adjs; ++i) attach(noun, &GNode::left, word("j", 30, "ADJ", "amod"));
    if (depth < 2 && chance(0.2)) attach(noun, &GNode::right, prep_phrase(depth + 1, "nmod"));
    if (depth < 1 && chance(0.12)) attach(noun, &GNode::right, clause(depth + 1, /*relative=*/true));
    if (depth < 1 && chance(0.08)) {
      attach(noun, &GNode::right, leaf("and", "CONJ", "cc"));
      attach(noun, &GNode::right, noun_phrase(depth + 1, "conj"));
    }
    return noun;
  }

  int prep_phrase(int depth, const char* label) {
    int prep = word("p", 8, "ADP", label);
    attach(prep, &GNode::right, noun_phrase(depth + 1, "pobj"));
    return prep;
  }

  // Main or relative clause headed by a verb; returns the verb.
  int clause(int depth, bool relative) {
    const bool transitive = chance(0.65);
    int verb = transitive ? word("vt", 25, "VERB", "acl") : word("vi", 12, "VERB", "acl");
    int subject = -1;
    if (relative) {
      if (chance(0.3)) attach(verb, &GNode::left, leaf(",", "PUNCT", "punct"));
      attach(verb, &GNode::left, leaf(chance(0.5) ? "that" : "who", "REL", "nsubj"));
    } else {
      subject = noun_phrase(depth, "nsubj");
      at(verb).left.push_back(subject);
    }
    if (chance(0.25)) attach(verb, &GNode::left, word("aux", 3, "AUX", "aux"));
    int object = -1;
    if (transitive) {
      object = noun_phrase(depth + 1, "obj");
      at(verb).right.push_back(object);
    }
    // PPs after the object attach to the verb or the object; the preposition
    // index biases the choice.
    int pps = chance(0.45) ? (chance(0.3) ? 2 : 1) : 0;
    for (int i = 0; i < pps && depth < 2; ++i) {
      int pp = prep_phrase(depth + 1, "obl");
      int p = std::stoi(at(pp).form.substr(1));
      double noun_bias = (p + 0.5) / 8.0;
      if (object >= 0 && at(object).pos == "NOUN" && chance(noun_bias)) {
        at(pp).label = "nmod";
        at(object).right.push_back(pp);
      } else {
        at(verb).right.push_back(pp);
      }
    }
    if (chance(0.2)) attach(verb, &GNode::right, word("adv", 10, "ADV", "advmod"));
    if (!relative && subject >= 0 && !at(subject).right.empty() && chance(extraposition_)) {
      // move the subject's last modifier behind the verb phrase
      int moved = at(subject).right.back();
      at(subject).right.pop_back();
      at(verb).right.push_back(moved);
      extraposed_.push_back({moved, subject});
    }
    return verb;
  }

  Sentence linearize(int root) {
    std::vector<int> order;
    std::vector<int> parent(nodes_.size(), -1);
    auto walk = [&](auto&& self, int v) -> void {
      for (int c : at(v).left) {
        parent[static_cast<size_t>(c)] = v;
        self(self, c);
      }
      order.push_back(v);
      for (int c : at(v).right) {
        parent[static_cast<size_t>(c)] = v;
        self(self, c);
      }
    };
    walk(walk, root);
    // extraposed modifiers keep their syntactic head
    for (auto [moved, head] : extraposed_) parent[static_cast<size_t>(moved)] = head;
    extraposed_.clear();

    std::vector<int> position(nodes_.size(), 0);
    for (size_t i = 0; i < order.size(); ++i) position[static_cast<size_t>(order[i])] = static_cast<int>(i) + 1;
    Sentence s;
    for (size_t i = 0; i < order.size(); ++i) {
      const GNode& g = at(order[i]);
      Token t;
      t.id = static_cast<int>(i) + 1;
      t.form = g.form;
      t.lemma = g.form;
      t.cpos = g.pos;
      t.pos = g.pos;
      int p = parent[static_cast<size_t>(order[i])];
      t.head = p < 0 ? 0 : position[static_cast<size_t>(p)];
      t.deprel = g.label;
      s.tokens.push_back(std::move(t));
    }
    return s;
  }

  Rng& rng_;
  double extraposition_;
  std::vector<GNode> nodes_;
  std::vector<std::pair<int, int>> extraposed_;
};

}  // namespace

std::vector<Sentence> synthetic_treebank(const SyntheticTreebankOptions& opts) {
  Rng rng(opts.seed);
  Grammar grammar(rng, opts.extraposition);
  std::vector<Sentence> out;
  out.reserve(static_cast<size_t>(opts.sentences));
  for (int i = 0; i < opts.sentences; ++i) out.push_back(grammar.sentence());
  return out;
}

}  // namespace twoplanar
