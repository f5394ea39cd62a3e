#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "twoplanar/eval.hpp"
#include "twoplanar/treegen.hpp"

using namespace twoplanar;

namespace {

Sentence sentence(const std::vector<std::string>& forms, const std::vector<int>& heads,
                  const std::vector<std::string>& labels) {
  Sentence s;
  for (size_t i = 0; i < forms.size(); ++i) {
    Token t;
    t.id = static_cast<int>(i) + 1;
    t.form = forms[i];
    t.head = heads[i];
    t.deprel = labels[i];
    s.tokens.push_back(t);
  }
  return s;
}

// Gold chains of ten tokens. B gets each head wrong with probability
// b_error; A fixes each of B's errors with probability repaired.
struct Synthetic {
  std::vector<Sentence> gold, a, b;
};

Synthetic synthetic_pair(int sentences, double b_error, double repaired, std::uint64_t seed) {
  Rng rng(seed);
  Synthetic out;
  for (int i = 0; i < sentences; ++i) {
    std::vector<int> heads;
    for (int k = 0; k < 10; ++k) heads.push_back(k);
    Sentence g = sentence(std::vector<std::string>(10, "w"), heads, std::vector<std::string>(10, "dep"));
    Sentence a = g, b = g;
    for (int k = 0; k < 10; ++k) {
      if (uniform_real(rng) >= b_error) continue;
      const int wrong = heads[static_cast<size_t>(k)] == 0 ? 2 : 0;
      b.tokens[static_cast<size_t>(k)].head = wrong;
      if (uniform_real(rng) >= repaired) a.tokens[static_cast<size_t>(k)].head = wrong;
    }
    out.gold.push_back(g);
    out.a.push_back(a);
    out.b.push_back(b);
  }
  return out;
}

}  // namespace

TEST_SUITE("eval") {

TEST_CASE("perfect prediction") {
  SyntheticTreebankOptions o;
  o.sentences = 30;
  const auto gold = synthetic_treebank(o);
  const EvalReport r = evaluate(gold, gold, false);
  CHECK(r.uas == 100.0);
  CHECK(r.las == 100.0);
  CHECK(format_report(r).rfind("UAS 100.00 LAS 100.00", 0) == 0);
}

TEST_CASE("attachment arithmetic") {
  const Sentence gold = sentence({"a", "b", "c", "d"}, {2, 0, 2, 3}, {"x", "root", "y", "z"});
  // heads 1-3 right, labels right for 1 and 2 only
  const Sentence pred = sentence({"a", "b", "c", "d"}, {2, 0, 2, 1}, {"x", "root", "q", "z"});
  const EvalReport r = evaluate({pred}, {gold}, false);
  CHECK(r.uas == doctest::Approx(75.0));
  CHECK(r.las == doctest::Approx(50.0));
  CHECK(r.tokens_scored == 4);
  CHECK(r.heads_correct == 3);
  CHECK(r.labeled_correct == 2);
  CHECK(format_report(r) == "UAS 75.00 LAS 50.00 scored 4 excluded 0");
  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["uas"] == 75.0);
  CHECK(j["tokens_excluded"] == 0);
}

TEST_CASE("punctuation exclusion") {
  const Sentence comma = sentence({","}, {0}, {"punct"});
  const EvalReport r = evaluate({comma}, {comma}, true);
  CHECK(r.tokens_scored == 0);
  CHECK(r.tokens_excluded == 1);
  CHECK(r.uas == 0.0);

  const Sentence gold = sentence({"Hi", "!", "there", "..."}, {0, 1, 1, 1}, {"r", "p", "d", "p"});
  const Sentence pred = sentence({"Hi", "!", "there", "..."}, {0, 3, 1, 3}, {"r", "p", "d", "p"});
  CHECK(evaluate({pred}, {gold}, true).uas == 100.0);
  CHECK(evaluate({pred}, {gold}, false).uas == 50.0);
}

TEST_CASE("Unicode punctuation") {
  CHECK(is_punctuation(","));
  CHECK(is_punctuation("..."));
  CHECK(is_punctuation("«»"));  // guillemets
  CHECK(is_punctuation("\u2014"));  // dash
  CHECK(is_punctuation("¿"));
  CHECK(is_punctuation("。"));  // ideographic full stop
  CHECK_FALSE(is_punctuation(""));
  CHECK_FALSE(is_punctuation("a,"));
  CHECK_FALSE(is_punctuation("$"));  // currency symbol, not punctuation
  CHECK_FALSE(is_punctuation("+"));
  CHECK_FALSE(is_punctuation("\xff"));
  CHECK_FALSE(is_punctuation("1"));
}

TEST_CASE("misaligned input is rejected") {
  const Sentence a = sentence({"a", "b"}, {0, 1}, {"r", "d"});
  const Sentence b = sentence({"a"}, {0}, {"r"});
  CHECK_THROWS_AS(evaluate({a}, {b}, false), std::invalid_argument);
  CHECK_THROWS_AS(evaluate({a, a}, {a}, false), std::invalid_argument);
  CHECK_THROWS_AS(paired_bootstrap({a}, {a}, {b}, 10, 1), std::invalid_argument);
}

TEST_CASE("scores are bounded and order-independent") {
  Rng rng(3);
  for (int round = 0; round < 50; ++round) {
    SyntheticTreebankOptions o;
    o.sentences = 40;
    o.seed = static_cast<std::uint64_t>(round) + 1;
    auto gold = synthetic_treebank(o);
    auto pred = gold;
    for (Sentence& s : pred)
      for (Token& t : s.tokens) {
        if (uniform_real(rng) < 0.2) t.head = uniform_int(rng, 0, s.size());
        if (uniform_real(rng) < 0.2) t.deprel = "other";
      }
    const EvalReport r = evaluate(pred, gold, round % 2 == 0);
    REQUIRE(0.0 <= r.las);
    REQUIRE(r.las <= r.uas);
    REQUIRE(r.uas <= 100.0);
    std::vector<size_t> idx(gold.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Sentence> g2, p2;
    for (size_t i : idx) g2.push_back(gold[i]), p2.push_back(pred[i]);
    const EvalReport r2 = evaluate(p2, g2, round % 2 == 0);
    REQUIRE(r2.heads_correct == r.heads_correct);
    REQUIRE(r2.labeled_correct == r.labeled_correct);
    REQUIRE(format_report(r2) == format_report(r));
  }
}

TEST_CASE("bootstrap of a system against itself") {
  const Synthetic d = synthetic_pair(300, 0.2, 0.3, 5);
  const SignificanceResult r = paired_bootstrap(d.gold, d.b, d.b, 2000, 7);
  CHECK(r.delta == 0.0);
  CHECK(r.p_value >= 0.95);
  CHECK(r.samples == 2000);
  CHECK(r.seed == 7);
  CHECK(paired_bootstrap(d.gold, d.a, d.a, 2000, 8, Metric::LAS).p_value >= 0.95);
}

TEST_CASE("bootstrap detects a clear improvement") {
  // B misses 20% of heads, A repairs a quarter of those: +5 UAS
  const Synthetic d = synthetic_pair(1000, 0.2, 0.25, 11);
  const double ua = evaluate(d.a, d.gold, false).uas, ub = evaluate(d.b, d.gold, false).uas;
  MESSAGE("UAS A " << ua << " B " << ub);
  REQUIRE(ua - ub == doctest::Approx(5.0).epsilon(0.1));
  const SignificanceResult r = paired_bootstrap(d.gold, d.a, d.b, 10000, 1);
  CHECK(r.delta == doctest::Approx(ua - ub));
  CHECK(r.p_value < 0.01);
  // the reverse claim is not supported
  CHECK(paired_bootstrap(d.gold, d.b, d.a, 10000, 1).p_value > 0.5);
}

TEST_CASE("bootstrap is deterministic and shrinks with the effect") {
  double last = 1.0;
  for (double repaired : {0.0, 0.01, 0.03, 0.06, 0.2}) {
    const Synthetic d = synthetic_pair(400, 0.2, repaired, 13);
    const SignificanceResult r = paired_bootstrap(d.gold, d.a, d.b, 3000, 21);
    const SignificanceResult again = paired_bootstrap(d.gold, d.a, d.b, 3000, 21);
    REQUIRE(r.p_value == again.p_value);
    REQUIRE(format_significance(r) == format_significance(again));
    MESSAGE("repaired " << repaired << " p " << r.p_value);
    CHECK(r.p_value <= last + 0.02);
    last = r.p_value;
  }
}

TEST_CASE("significance output") {
  SignificanceResult r;
  r.delta = 1.234;
  r.p_value = 0.01234;
  r.samples = 100;
  r.seed = 3;
  CHECK(format_significance(r) == "delta 1.23 p 0.0123 samples 100 seed 3");
  const auto j = nlohmann::json::parse(significance_json(r));
  CHECK(j["samples"] == 100);
}

TEST_CASE("planarity statistics") {
  const Sentence proj = sentence({"a", "b", "c"}, {2, 0, 2}, {"x", "y", "z"});
  PlanarityStats s = planarity_stats({proj, proj});
  CHECK(s.pct(s.one_planar, s.sentences) == 100.0);
  CHECK(s.discarded_arcs == 0);

  // arcs 0->1, 1->3, 3->2, 2->4
  const Sentence crossing = sentence({"a", "b", "c", "d"}, {0, 3, 1, 2}, {"x", "y", "z", "w"});
  s = planarity_stats({crossing});
  CHECK(s.one_planar == 0);
  CHECK(s.two_planar == 1);
  CHECK(s.neither == 0);
  CHECK(s.arcs == 4);
  CHECK(s.plane2_arcs == 1);
  CHECK(format_planarity(s).find("2-planar 100.00%") != std::string::npos);
  const auto j = nlohmann::json::parse(planarity_json(s));
  CHECK(j["two_planar_pct"] == 100.0);
}

}
