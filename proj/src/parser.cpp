#include "twoplanar/parser.hpp"

#include <sstream>

namespace twoplanar {

ParserState::ParserState(System system, int n)
    : system_(system),
      config_(system == System::TwoPlanar ? decltype(config_)(Configuration::initial(n))
                                          : decltype(config_)(HybridConfiguration::initial(n))),
      mods_(n) {}

int ParserState::sentence_length() const {
  return std::visit([](const auto& c) { return c.sentence_length(); }, config_);
}

bool ParserState::is_terminal() const {
  return std::visit([](const auto& c) { return c.is_terminal(); }, config_);
}

std::vector<Transition> ParserState::legal() const {
  if (system_ == System::TwoPlanar) return twoplanar::legal(planar());
  return hybrid_legal(hybrid());
}

bool ParserState::is_legal(const Transition& t) const {
  if (system_ == System::TwoPlanar) return twoplanar::is_legal(planar(), t);
  return hybrid_is_legal(hybrid(), t);
}

int ParserState::arc_dependent(const Transition& t) const {
  if (!t.is_arc()) return -1;
  if (system_ == System::TwoPlanar) {
    const auto& c = planar();
    return t.kind == Kind::LeftArc ? c.active_stack().back() : c.buffer_front();
  }
  return hybrid().stack().back();
}

int ParserState::arc_head(const Transition& t) const {
  if (!t.is_arc()) return -1;
  if (system_ == System::TwoPlanar) {
    const auto& c = planar();
    return t.kind == Kind::LeftArc ? c.buffer_front() : c.active_stack().back();
  }
  const auto& st = hybrid().stack();
  return t.kind == Kind::LeftArc ? hybrid().buffer_front() : st[st.size() - 2];
}

void ParserState::apply(const Transition& t) {
  const int dep = is_legal(t) ? arc_dependent(t) : -1;
  const int head = dep >= 0 ? arc_head(t) : -1;
  std::visit([&](auto& c) { c.apply_in_place(t); }, config_);
  if (dep >= 0) mods_.add({head, dep});
}

FeatureView ParserState::features() const {
  return std::visit([&](const auto& c) { return extract_features(c, mods_); }, config_);
}

DepGraph ParserState::extract(std::span<const std::string> label_names) const {
  if (system_ == System::TwoPlanar) return extract_parse(planar(), label_names);
  return hybrid_extract_parse(hybrid(), label_names);
}

namespace {

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string transition_text(const Transition& t, std::span<const std::string> names) {
  std::string s(kind_name(t.kind));
  if (t.is_arc() && t.label >= 0)
    s += "(" + (static_cast<size_t>(t.label) < names.size() ? names[static_cast<size_t>(t.label)] : std::to_string(t.label)) + ")";
  return s;
}

}  // namespace

std::string ParserState::trace_line(int step, const Transition& t, std::span<const std::string> label_names) const {
  if (system_ == System::TwoPlanar) return twoplanar::trace_line(step, t, planar(), label_names);
  const auto& c = hybrid();
  std::ostringstream os;
  os << "STEP " << step << ": " << transition_text(t, label_names) << " | S=" << list(c.stack())
     << " B=" << list(c.buffer());
  return os.str();
}

int best_legal_action(const ParserState& state, const ActionSpace& actions, const Eigen::VectorXf& scores) {
  bool allowed[kNumKinds] = {};
  for (const Transition& t : state.legal()) allowed[static_cast<int>(t.kind)] = true;
  int best = -1;
  for (int a = 0; a < actions.size(); ++a) {
    if (!allowed[static_cast<int>(actions.at(a).kind)]) continue;
    if (best < 0 || scores[a] > scores[best]) best = a;
  }
  return best;
}

DepGraph greedy_decode(System system, int n, const ActionSpace& actions, const ActionScorer& scorer,
                       std::span<const std::string> label_names, std::vector<std::string>* trace) {
  ParserState state(system, n);
  for (int step = 1; !state.is_terminal(); ++step) {
    const int a = best_legal_action(state, actions, scorer(state));
    if (a < 0) throw IllegalTransition("greedy_decode: no legal action in the action space");
    if (trace) trace->push_back(state.trace_line(step, actions.at(a), label_names));
    state.apply(actions.at(a));
  }
  return state.extract(label_names);
}

DepGraph greedy_parse(const Model& model, const Sentence& sentence, std::vector<std::string>* trace) {
  const EncodedSentence enc = model.encode(sentence);
  const Scorer::Context ctx = model.scorer.encode(enc);
  auto score = [&](const ParserState& st) { return model.scorer.score(enc, ctx, st.features()); };
  return greedy_decode(model.system, sentence.size(), model.actions(), score, model.labels.items(), trace);
}

Sentence with_parse(Sentence sentence, const DepGraph& parse) {
  if (parse.size() != sentence.size()) throw std::invalid_argument("with_parse: length mismatch");
  for (Token& t : sentence.tokens) {
    t.head = parse.heads[static_cast<size_t>(t.id)];
    t.deprel = parse.labels[static_cast<size_t>(t.id)];
  }
  return sentence;
}

}  // namespace twoplanar
