#include "twoplanar/eval.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <random>
#include <stdexcept>

#include "twoplanar/graph.hpp"
#include "twoplanar/oracle.hpp"
#include "twoplanar/treegen.hpp"

namespace twoplanar {

bool is_punctuation(std::string_view form) {
  if (form.empty()) return false;
  const auto* s = reinterpret_cast<const uint8_t*>(form.data());
  const auto len = static_cast<int32_t>(form.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(s, i, len, c);
    if (c < 0 || !u_ispunct(c)) return false;
  }
  return true;
}

namespace {

void check_aligned(const std::vector<Sentence>& a, const std::vector<Sentence>& b, const char* what) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + " sentences");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].size() != b[i].size())
      throw std::invalid_argument(std::string(what) + ": sentence " + std::to_string(i + 1) + " has " +
                                  std::to_string(a[i].size()) + " vs " + std::to_string(b[i].size()) + " tokens");
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

struct SentenceCounts {
  long scored = 0, uas_a = 0, las_a = 0, uas_b = 0, las_b = 0;
};

}  // namespace

EvalReport evaluate(const std::vector<Sentence>& pred, const std::vector<Sentence>& gold, bool exclude_punct) {
  check_aligned(pred, gold, "evaluate");
  EvalReport r;
  for (size_t i = 0; i < gold.size(); ++i) {
    for (size_t k = 0; k < gold[i].tokens.size(); ++k) {
      const Token& g = gold[i].tokens[k];
      const Token& p = pred[i].tokens[k];
      if (exclude_punct && is_punctuation(g.form)) {
        ++r.tokens_excluded;
        continue;
      }
      ++r.tokens_scored;
      if (p.head == g.head) {
        ++r.heads_correct;
        if (p.deprel == g.deprel) ++r.labeled_correct;
      }
    }
  }
  if (r.tokens_scored > 0) {
    r.uas = 100.0 * static_cast<double>(r.heads_correct) / static_cast<double>(r.tokens_scored);
    r.las = 100.0 * static_cast<double>(r.labeled_correct) / static_cast<double>(r.tokens_scored);
  }
  return r;
}

std::string format_report(const EvalReport& r) {
  return "UAS " + fixed2(r.uas) + " LAS " + fixed2(r.las) + " scored " + std::to_string(r.tokens_scored) +
         " excluded " + std::to_string(r.tokens_excluded);
}

std::string report_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["uas"] = round2(r.uas);
  j["las"] = round2(r.las);
  j["tokens_scored"] = r.tokens_scored;
  j["tokens_excluded"] = r.tokens_excluded;
  return j.dump();
}

SignificanceResult paired_bootstrap(const std::vector<Sentence>& gold, const std::vector<Sentence>& pred_a,
                                    const std::vector<Sentence>& pred_b, int samples, std::uint64_t seed,
                                    Metric metric, bool exclude_punct) {
  check_aligned(pred_a, gold, "paired_bootstrap");
  check_aligned(pred_b, gold, "paired_bootstrap");
  if (samples <= 0) throw std::invalid_argument("paired_bootstrap: samples must be positive");

  std::vector<SentenceCounts> counts(gold.size());
  for (size_t i = 0; i < gold.size(); ++i) {
    auto& c = counts[i];
    for (size_t k = 0; k < gold[i].tokens.size(); ++k) {
      const Token& g = gold[i].tokens[k];
      if (exclude_punct && is_punctuation(g.form)) continue;
      ++c.scored;
      const Token& a = pred_a[i].tokens[k];
      const Token& b = pred_b[i].tokens[k];
      if (a.head == g.head) {
        ++c.uas_a;
        if (a.deprel == g.deprel) ++c.las_a;
      }
      if (b.head == g.head) {
        ++c.uas_b;
        if (b.deprel == g.deprel) ++c.las_b;
      }
    }
  }

  auto delta = [&](auto&& each_index) {
    long scored = 0, a = 0, b = 0;
    each_index([&](size_t i) {
      const auto& c = counts[i];
      scored += c.scored;
      a += metric == Metric::UAS ? c.uas_a : c.las_a;
      b += metric == Metric::UAS ? c.uas_b : c.las_b;
    });
    return scored ? 100.0 * static_cast<double>(a - b) / static_cast<double>(scored) : 0.0;
  };

  SignificanceResult r;
  r.samples = samples;
  r.seed = seed;
  r.delta = delta([&](auto&& f) {
    for (size_t i = 0; i < counts.size(); ++i) f(i);
  });
  if (counts.empty()) return r;

  const int n = static_cast<int>(counts.size());
  long hits = 0;
  for (int s = 0; s < samples; ++s) {
    // one generator per resample, so results do not depend on evaluation order
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(s)};
    Rng rng(seq);
    const double d = delta([&](auto&& f) {
      for (int k = 0; k < n; ++k) f(static_cast<size_t>(uniform_int(rng, 0, n - 1)));
    });
    if (d >= 2.0 * r.delta) ++hits;
  }
  r.p_value = static_cast<double>(hits) / samples;
  return r;
}

std::string format_significance(const SignificanceResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "delta %.2f p %.4f samples %d seed %llu", r.delta, r.p_value, r.samples,
                static_cast<unsigned long long>(r.seed));
  return buf;
}

std::string significance_json(const SignificanceResult& r) {
  nlohmann::ordered_json j;
  j["delta"] = round2(r.delta);
  j["p_value"] = r.p_value;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  return j.dump();
}

PlanarityStats planarity_stats(const std::vector<Sentence>& sentences) {
  PlanarityStats st;
  for (const Sentence& s : sentences) {
    DepGraph g(s.size());
    for (const Token& t : s.tokens) g.heads[static_cast<size_t>(t.id)] = t.head;
    const auto arcs = g.arcs();
    ++st.sentences;
    const bool one = is_noncrossing(arcs);
    const bool two = one || is_two_planar(arcs);
    st.one_planar += one;
    st.two_planar += two;
    st.neither += !two;
    const PlaneAssignment pa = assign_planes(g);
    for (int d = 1; d <= s.size(); ++d) {
      ++st.arcs;
      st.plane2_arcs += pa.plane(d) == 1;
      st.discarded_arcs += pa.plane(d) < 0;
    }
  }
  return st;
}

std::string format_planarity(const PlanarityStats& s) {
  std::string out;
  out += "sentences " + std::to_string(s.sentences) + "\n";
  out += "1-planar " + fixed2(s.pct(s.one_planar, s.sentences)) + "%\n";
  out += "2-planar " + fixed2(s.pct(s.two_planar, s.sentences)) + "%\n";
  out += "neither " + fixed2(s.pct(s.neither, s.sentences)) + "%\n";
  out += "arcs " + std::to_string(s.arcs) + "\n";
  out += "plane2-arcs " + fixed2(s.pct(s.plane2_arcs, s.arcs)) + "%\n";
  out += "discarded-arcs " + fixed2(s.pct(s.discarded_arcs, s.arcs)) + "%\n";
  return out;
}

std::string planarity_json(const PlanarityStats& s) {
  nlohmann::ordered_json j;
  j["sentences"] = s.sentences;
  j["one_planar_pct"] = round2(s.pct(s.one_planar, s.sentences));
  j["two_planar_pct"] = round2(s.pct(s.two_planar, s.sentences));
  j["neither_pct"] = round2(s.pct(s.neither, s.sentences));
  j["arcs"] = s.arcs;
  j["plane2_arcs_pct"] = round2(s.pct(s.plane2_arcs, s.arcs));
  j["discarded_arcs_pct"] = round2(s.pct(s.discarded_arcs, s.arcs));
  return j.dump();
}

}  // namespace twoplanar
