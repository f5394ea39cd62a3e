// twoplanar: train, run and evaluate 2-Planar and arc-hybrid+Swap parsers.
#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <json.hpp>

#include "twoplanar/conll.hpp"
#include "twoplanar/eval.hpp"
#include "twoplanar/model_archive.hpp"
#include "twoplanar/parser.hpp"
#include "twoplanar/trainer.hpp"
#include "twoplanar/treegen.hpp"
#include "twoplanar/verify.hpp"

using namespace twoplanar;
using json = nlohmann::ordered_json;

namespace {

struct TrainArgs {
  std::string train, dev, system = "2planar", oracle = "dynamic", model, embeddings, encoder = "none";
  int iters = 15, hidden = 128, rnn_dim = 64;
  double lr = 0.01, explore = 0.9;
};

struct ParseArgs {
  std::string model, input, output;
  bool trace = false;
};

struct EvalArgs {
  std::string gold, pred;
  bool exclude_punct = false;
};

struct SigArgs {
  std::string gold, pred_a, pred_b, metric = "uas";
  int samples = 10000;
  bool exclude_punct = false;
};

struct VerifyArgs {
  std::string system = "2planar";
  int max_len = 6;
  long samples = 10000;
};

struct GenArgs {
  std::string output;
  int sentences = 1000;
  double extraposition = 0.15;
};

std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

int run_train(const TrainArgs& a, std::uint64_t seed, bool as_json) {
  TrainOptions opts;
  opts.system = parse_system(a.system);
  opts.oracle = parse_oracle(a.oracle);
  opts.hp.iterations = a.iters;
  opts.hp.seed = seed;
  opts.hp.hidden = a.hidden;
  opts.hp.learning_rate = a.lr;
  opts.hp.explore_prob = a.explore;
  opts.hp.rnn_dim = a.encoder == "birnn" ? a.rnn_dim : 0;
  opts.embeddings = a.embeddings;
  const auto train_set = read_conll(std::filesystem::path(a.train));
  const auto dev_set = read_conll(std::filesystem::path(a.dev));
  const TrainResult r = train(train_set, dev_set, opts, [&](const IterationReport& it) {
    if (as_json) {
      json j;
      j["iteration"] = it.iteration;
      j["loss"] = it.loss;
      j["train_uas"] = std::round(it.train_uas * 100) / 100;
      j["dev_uas"] = std::round(it.dev_uas * 100) / 100;
      j["updates"] = it.updates;
      j["explored"] = it.explored;
      std::cout << j.dump() << std::endl;
    } else {
      std::cout << "iteration " << it.iteration << " loss " << fixed2(it.loss) << " train-uas "
                << fixed2(it.train_uas) << " dev-uas " << fixed2(it.dev_uas) << std::endl;
    }
  });
  save_model(r.model, std::filesystem::path(a.model));
  if (as_json) {
    json j;
    j["best_iteration"] = r.best_iteration;
    j["best_dev_uas"] = std::round(r.best_dev_uas * 100) / 100;
    j["model"] = a.model;
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "best iteration " << r.best_iteration << " dev-uas " << fixed2(r.best_dev_uas) << " saved "
              << a.model << "\n";
  }
  return 0;
}

int run_parse(const ParseArgs& a, bool as_json) {
  const Model model = load_model(std::filesystem::path(a.model));
  const auto input = read_conll(std::filesystem::path(a.input));
  std::vector<Sentence> out;
  out.reserve(input.size());
  for (size_t i = 0; i < input.size(); ++i) {
    std::vector<std::string> trace;
    out.push_back(with_parse(input[i], greedy_parse(model, input[i], a.trace ? &trace : nullptr)));
    if (!a.trace) continue;
    if (as_json) {
      json j;
      j["sentence"] = i + 1;
      j["trace"] = trace;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "# sentence " << i + 1 << "\n";
      for (const auto& line : trace) std::cout << line << "\n";
    }
  }
  write_conll(out, std::filesystem::path(a.output));
  if (as_json) {
    json j;
    j["sentences"] = out.size();
    j["output"] = a.output;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_eval(const EvalArgs& a, bool as_json) {
  const auto gold = read_conll(std::filesystem::path(a.gold));
  const auto pred = read_conll(std::filesystem::path(a.pred));
  const EvalReport r = evaluate(pred, gold, a.exclude_punct);
  std::cout << (as_json ? report_json(r) : format_report(r)) << "\n";
  return 0;
}

int run_significance(const SigArgs& a, std::uint64_t seed, bool as_json) {
  const auto gold = read_conll(std::filesystem::path(a.gold));
  const auto pa = read_conll(std::filesystem::path(a.pred_a));
  const auto pb = read_conll(std::filesystem::path(a.pred_b));
  const Metric metric = a.metric == "las" ? Metric::LAS : Metric::UAS;
  const SignificanceResult r = paired_bootstrap(gold, pa, pb, a.samples, seed, metric, a.exclude_punct);
  std::cout << (as_json ? significance_json(r) : format_significance(r)) << "\n";
  return 0;
}

int run_verify(const VerifyArgs& a, std::uint64_t seed, bool as_json) {
  VerifyOptions opts;
  opts.max_len = a.max_len;
  opts.samples = a.samples;
  opts.seed = seed;
  const System system = parse_system(a.system);
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport r = verify_oracle(system, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (as_json) {
    json j;
    j["system"] = a.system;
    j["trees"] = r.trees;
    j["configurations"] = r.configurations;
    j["walks"] = r.walks;
    j["mismatches"] = r.mismatches;
    j["seconds"] = std::round(secs * 100) / 100;
    if (!r.ok()) j["counterexample"] = r.counterexample;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "system " << a.system << " trees " << r.trees << " configurations " << r.configurations
              << " walks " << r.walks << " mismatches " << r.mismatches << " seconds " << fixed2(secs) << "\n";
    for (const auto& line : r.counterexample) std::cout << line << "\n";
  }
  return r.ok() ? 0 : 1;
}

int run_planarity(const std::string& input, bool as_json) {
  const PlanarityStats s = planarity_stats(read_conll(std::filesystem::path(input)));
  std::cout << (as_json ? planarity_json(s) + "\n" : format_planarity(s));
  return 0;
}

int run_generate(const GenArgs& a, std::uint64_t seed) {
  SyntheticTreebankOptions opts;
  opts.sentences = a.sentences;
  opts.extraposition = a.extraposition;
  opts.seed = seed;
  write_conll(synthetic_treebank(opts), std::filesystem::path(a.output));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-Planar and arc-hybrid+Swap dependency parsing toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "Emit JSON lines instead of plain text");
  app.add_option("--seed", seed, "Random seed")->envname("PARSER_SEED");

  const std::vector<std::string> systems{"2planar", "hybrid-swap"};

  TrainArgs ta;
  auto* train_cmd = app.add_subcommand("train", "Train a parser");
  train_cmd->add_option("--train", ta.train, "Training treebank (CoNLL-X)")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--dev", ta.dev, "Development treebank (CoNLL-X)")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--system", ta.system)->check(CLI::IsMember(systems))->capture_default_str();
  train_cmd->add_option("--oracle", ta.oracle)->check(CLI::IsMember({"static", "dynamic"}))->capture_default_str();
  train_cmd->add_option("--iters", ta.iters)->check(CLI::PositiveNumber)->capture_default_str();
  train_cmd->add_option("--model", ta.model, "Output model archive")->required();
  train_cmd->add_option("--embeddings", ta.embeddings, "Pretrained form vectors")->check(CLI::ExistingFile);
  train_cmd->add_option("--encoder", ta.encoder)->check(CLI::IsMember({"none", "birnn"}))->capture_default_str();
  train_cmd->add_option("--rnn-dim", ta.rnn_dim, "Encoder state size per direction")->check(CLI::PositiveNumber)->capture_default_str();
  train_cmd->add_option("--hidden", ta.hidden)->check(CLI::PositiveNumber)->capture_default_str();
  train_cmd->add_option("--learning-rate", ta.lr)->check(CLI::PositiveNumber)->capture_default_str();
  train_cmd->add_option("--explore-prob", ta.explore)->check(CLI::Range(0.0, 1.0))->capture_default_str();

  ParseArgs pa;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a CoNLL-X file");
  parse_cmd->add_option("--model", pa.model)->required()->check(CLI::ExistingFile);
  parse_cmd->add_option("--input", pa.input)->required()->check(CLI::ExistingFile);
  parse_cmd->add_option("--output", pa.output)->required();
  parse_cmd->add_flag("--trace", pa.trace, "Print every transition");

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Attachment scores");
  eval_cmd->add_option("--gold", ea.gold)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--pred", ea.pred)->required()->check(CLI::ExistingFile);
  eval_cmd->add_flag("--exclude-punct", ea.exclude_punct, "Skip tokens made only of punctuation");

  SigArgs sa;
  auto* sig_cmd = app.add_subcommand("significance", "Paired bootstrap test (A claimed better than B)");
  sig_cmd->add_option("--gold", sa.gold)->required()->check(CLI::ExistingFile);
  sig_cmd->add_option("--pred-a", sa.pred_a)->required()->check(CLI::ExistingFile);
  sig_cmd->add_option("--pred-b", sa.pred_b)->required()->check(CLI::ExistingFile);
  sig_cmd->add_option("--samples", sa.samples)->check(CLI::PositiveNumber)->capture_default_str();
  sig_cmd->add_option("--metric", sa.metric)->check(CLI::IsMember({"uas", "las"}))->capture_default_str();
  sig_cmd->add_flag("--exclude-punct", sa.exclude_punct);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("oracle-verify", "Check an oracle against exhaustive search");
  verify_cmd->add_option("--max-len", va.max_len)->check(CLI::Range(1, 7))->capture_default_str();
  verify_cmd->add_option("--samples", va.samples)->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("--system", va.system)->check(CLI::IsMember(systems))->capture_default_str();

  std::string planarity_input;
  auto* planarity_cmd = app.add_subcommand("planarity-stats", "1-/2-planarity of a treebank");
  planarity_cmd->add_option("--input", planarity_input)->required()->check(CLI::ExistingFile);

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic treebank");
  gen_cmd->add_option("--output", ga.output)->required();
  gen_cmd->add_option("--sentences", ga.sentences)->check(CLI::PositiveNumber)->capture_default_str();
  gen_cmd->add_option("--extraposition", ga.extraposition)->check(CLI::Range(0.0, 1.0))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*train_cmd) return run_train(ta, seed, as_json);
    if (*parse_cmd) return run_parse(pa, as_json);
    if (*eval_cmd) return run_eval(ea, as_json);
    if (*sig_cmd) return run_significance(sa, seed, as_json);
    if (*verify_cmd) return run_verify(va, seed, as_json);
    if (*planarity_cmd) return run_planarity(planarity_input, as_json);
    if (*gen_cmd) return run_generate(ga, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
