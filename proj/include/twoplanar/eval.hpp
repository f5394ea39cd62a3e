// Attachment scores, paired bootstrap significance and treebank planarity
// statistics.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twoplanar/conll.hpp"

namespace twoplanar {

struct EvalReport {
  double uas = 0;  // percentages
  double las = 0;
  long tokens_scored = 0;
  long tokens_excluded = 0;
  long heads_correct = 0;
  long labeled_correct = 0;
};

// True iff form is non-empty valid UTF-8 made only of Unicode punctuation
// (general category P*).
bool is_punctuation(std::string_view form);

// Throws std::invalid_argument if sentence or token counts differ.
EvalReport evaluate(const std::vector<Sentence>& pred, const std::vector<Sentence>& gold, bool exclude_punct);

// "UAS 93.50 LAS 91.20 scored 1000 excluded 0"
std::string format_report(const EvalReport& r);
std::string report_json(const EvalReport& r);

enum class Metric { UAS, LAS };

struct SignificanceResult {
  double delta = 0;  // metric(A) - metric(B) on the full set, in points
  double p_value = 1;
  int samples = 0;
  std::uint64_t seed = 0;
};

// One-sided paired bootstrap over sentences; A is the system claimed to be
// better. p is the fraction of resamples whose delta is at least twice the
// observed one (the resampled deltas centred on the null hypothesis reach
// the observed delta).
SignificanceResult paired_bootstrap(const std::vector<Sentence>& gold, const std::vector<Sentence>& pred_a,
                                    const std::vector<Sentence>& pred_b, int samples, std::uint64_t seed,
                                    Metric metric = Metric::UAS, bool exclude_punct = false);

std::string format_significance(const SignificanceResult& r);
std::string significance_json(const SignificanceResult& r);

struct PlanarityStats {
  long sentences = 0;
  long one_planar = 0;  // no crossing arcs
  long two_planar = 0;  // includes the 1-planar ones
  long neither = 0;
  long arcs = 0;
  long plane2_arcs = 0;  // as placed by assign_planes
  long discarded_arcs = 0;

  double pct(long part, long whole) const { return whole ? 100.0 * static_cast<double>(part) / static_cast<double>(whole) : 0.0; }
};

PlanarityStats planarity_stats(const std::vector<Sentence>& sentences);
std::string format_planarity(const PlanarityStats& s);
std::string planarity_json(const PlanarityStats& s);

}  // namespace twoplanar
