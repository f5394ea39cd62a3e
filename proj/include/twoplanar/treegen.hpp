// Random dependency structures for property tests and a small synthetic
// treebank generator used when no real treebank is at hand.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twoplanar/conll.hpp"
#include "twoplanar/graph.hpp"

namespace twoplanar {

using Rng = std::mt19937_64;

// Uniform random attachment: nodes are visited in random order and each picks
// its head among node 0 and the nodes already attached. Always a tree rooted
// at 0 (possibly several root attachments), arbitrary crossings.
DepGraph random_tree(int n, Rng& rng);

// Rejection-sampled from random_tree.
DepGraph random_two_planar_tree(int n, Rng& rng);
DepGraph random_projective_tree(int n, Rng& rng);
DepGraph random_non_projective_tree(int n, Rng& rng);

// Nodes 0..n-1, each with a head drawn uniformly from {none} u {other
// nodes}. In-degree <= 1; cycles allowed.
std::vector<Arc> random_functional_graph(int nodes, Rng& rng);

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
double uniform_real(Rng& rng);              // [0, 1)

struct SyntheticTreebankOptions {
  int sentences = 1000;
  // probability that a subject modifier is extraposed past the verb phrase
  double extraposition = 0.15;
  std::uint64_t seed = 1;
};

// Sentences from a small head-driven grammar (subjects, objects, PPs with
// lexically biased attachment, relative clauses, coordination,
// punctuation). Extraposition produces non-projective, mostly 2-planar
// trees. Forms and tags are synthetic.
std::vector<Sentence> synthetic_treebank(const SyntheticTreebankOptions& opts);

}  // namespace twoplanar
