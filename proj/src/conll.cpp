#include "twoplanar/conll.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "twoplanar/graph.hpp"

namespace twoplanar {

std::vector<int> Sentence::heads() const {
  std::vector<int> h(tokens.size() + 1);
  h[0] = -1;
  for (const Token& t : tokens) h[static_cast<size_t>(t.id)] = t.head;
  return h;
}

std::vector<std::string> Sentence::labels() const {
  std::vector<std::string> l(tokens.size() + 1);
  for (const Token& t : tokens) l[static_cast<size_t>(t.id)] = t.deprel;
  return l;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool parse_int(const std::string& s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

struct PendingSentence {
  Sentence sentence;
  std::vector<size_t> lines;  // source line of each token
};

void finish(PendingSentence& pending, std::vector<Sentence>& out) {
  if (pending.sentence.tokens.empty()) return;
  const int n = pending.sentence.size();
  for (size_t i = 0; i < pending.sentence.tokens.size(); ++i) {
    const Token& t = pending.sentence.tokens[i];
    if (t.head > n) throw ConllError("head " + std::to_string(t.head) + " out of range", pending.lines[i]);
  }
  if (!is_forest(pending.sentence.heads()))
    throw ConllError("cyclic gold heads in sentence", pending.lines.front());
  out.push_back(std::move(pending.sentence));
  pending = PendingSentence{};
}

}  // namespace

std::vector<Sentence> read_conll(std::istream& in) {
  std::vector<Sentence> out;
  PendingSentence pending;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish(pending, out);
      continue;
    }
    if (line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 10)
      throw ConllError("expected 10 columns, found " + std::to_string(fields.size()), lineno);
    Token t;
    if (fields[0].find_first_of("-.") != std::string::npos)
      throw ConllError("multi-word or empty-node id '" + fields[0] + "' is not CoNLL-X", lineno);
    if (!parse_int(fields[0], t.id)) throw ConllError("non-integer id '" + fields[0] + "'", lineno);
    if (t.id != pending.sentence.size() + 1)
      throw ConllError("token id " + std::to_string(t.id) + " out of sequence", lineno);
    if (!parse_int(fields[6], t.head)) throw ConllError("non-integer head '" + fields[6] + "'", lineno);
    if (t.head < 0) throw ConllError("negative head", lineno);
    if (t.head == t.id) throw ConllError("token is its own head", lineno);
    t.form = fields[1];
    t.lemma = fields[2];
    t.cpos = fields[3];
    t.pos = fields[4];
    t.feats = fields[5];
    t.deprel = fields[7];
    t.phead = fields[8];
    t.pdeprel = fields[9];
    pending.sentence.tokens.push_back(std::move(t));
    pending.lines.push_back(lineno);
  }
  finish(pending, out);
  return out;
}

std::vector<Sentence> read_conll(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_conll(in);
}

void write_conll(const std::vector<Sentence>& sentences, std::ostream& out) {
  for (const Sentence& s : sentences) {
    for (const Token& t : s.tokens) {
      out << t.id << '\t' << t.form << '\t' << t.lemma << '\t' << t.cpos << '\t' << t.pos << '\t'
          << t.feats << '\t' << t.head << '\t' << t.deprel << '\t' << t.phead << '\t' << t.pdeprel
          << '\n';
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_conll: output stream failure");
}

void write_conll(const std::vector<Sentence>& sentences, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_conll(sentences, out);
  out.flush();
  if (!out) throw std::runtime_error("write failure on " + path.string());
}

Sentence make_sentence(const std::vector<int>& heads, const std::vector<std::string>& labels) {
  Sentence s;
  for (size_t i = 1; i < heads.size(); ++i) {
    Token t;
    t.id = static_cast<int>(i);
    t.form = "w" + std::to_string(i);
    t.lemma = t.form;
    t.head = heads[i];
    t.deprel = i < labels.size() && !labels[i].empty() ? labels[i] : "dep";
    s.tokens.push_back(std::move(t));
  }
  return s;
}

}  // namespace twoplanar
