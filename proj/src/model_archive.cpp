#include "twoplanar/model_archive.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace twoplanar {

EncodedSentence Model::encode(const Sentence& s) const {
  EncodedSentence e;
  e.form.reserve(static_cast<size_t>(s.size()) + 1);
  e.pos.reserve(static_cast<size_t>(s.size()) + 1);
  e.form.push_back(Vocab::kRoot);
  e.pos.push_back(Vocab::kRoot);
  for (const Token& t : s.tokens) {
    e.form.push_back(forms.id(t.form));
    e.pos.push_back(pos.id(t.pos));
  }
  return e;
}

Model make_model(System system, const Hyperparams& hp, const std::vector<Sentence>& train) {
  Model m;
  m.system = system;
  m.hp = hp;
  for (const Sentence& s : train)
    for (const Token& t : s.tokens) {
      m.forms.add(t.form);
      m.pos.add(t.pos);
      m.labels.add(t.deprel);
    }
  Rng rng(hp.seed);
  m.scorer = Scorer(hp, feature_arity(system), m.forms.size(), m.pos.size(), m.actions().size(), rng);
  return m;
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

void put_string(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw ArchiveError("truncated archive");
  return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
         static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
}

std::string get_string(std::istream& in) {
  const std::uint32_t n = get_u32(in);
  if (n > (1u << 24)) throw ArchiveError("implausible string length in archive");
  std::string s(n, '\0');
  if (!in.read(s.data(), n)) throw ArchiveError("truncated archive");
  return s;
}

template <typename T>
std::string num(T v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

template <typename T>
T parse_num(const std::string& s, const std::string& name) {
  T v{};
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw ArchiveError("bad value for hyperparameter " + name + ": " + s);
  return v;
}

std::vector<std::pair<std::string, std::string>> hyper_fields(const Hyperparams& hp) {
  return {{"form_dim", num(hp.form_dim)},
          {"pos_dim", num(hp.pos_dim)},
          {"hidden", num(hp.hidden)},
          {"rnn_dim", num(hp.rnn_dim)},
          {"learning_rate", num(hp.learning_rate)},
          {"explore_prob", num(hp.explore_prob)},
          {"explore_from", num(hp.explore_from)},
          {"iterations", num(hp.iterations)},
          {"seed", num(hp.seed)}};
}

void put_vocab(std::ostream& out, const Vocab& v, bool specials) {
  const auto& items = v.items();
  const size_t skip = specials ? 3 : 0;
  put_u32(out, static_cast<std::uint32_t>(items.size() - skip));
  for (size_t i = skip; i < items.size(); ++i) put_string(out, items[i]);
}

void get_vocab(std::istream& in, Vocab& v) {
  const std::uint32_t n = get_u32(in);
  for (std::uint32_t i = 0; i < n; ++i) v.add(get_string(in));
}

}  // namespace

void save_model(const Model& m, std::ostream& out) {
  out.write("2PLN", 4);
  const char ver[2] = {static_cast<char>(kArchiveVersion & 0xff), static_cast<char>(kArchiveVersion >> 8)};
  out.write(ver, 2);
  put_string(out, std::string(system_name(m.system)));
  const auto fields = hyper_fields(m.hp);
  put_u32(out, static_cast<std::uint32_t>(fields.size()));
  for (const auto& [k, v] : fields) {
    put_string(out, k);
    put_string(out, v);
  }
  put_vocab(out, m.forms, true);
  put_vocab(out, m.pos, true);
  put_vocab(out, m.labels, false);
  const auto& tensors = m.scorer.tensors();
  put_u32(out, static_cast<std::uint32_t>(tensors.size()));
  for (const auto& t : tensors) {
    put_string(out, t.name);
    put_u32(out, static_cast<std::uint32_t>(t.value.rows()));
    put_u32(out, static_cast<std::uint32_t>(t.value.cols()));
    const float* p = t.value.data();
    for (Eigen::Index i = 0; i < t.value.size(); ++i) put_u32(out, std::bit_cast<std::uint32_t>(p[i]));
  }
  if (!out) throw ArchiveError("failed writing model archive");
}

void save_model(const Model& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArchiveError("cannot open " + path.string() + " for writing");
  save_model(m, out);
  out.close();
  if (!out) throw ArchiveError("failed writing " + path.string());
}

Model load_model(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::string(magic, 4) != "2PLN") throw ArchiveError("not a model archive (bad magic)");
  unsigned char ver[2];
  if (!in.read(reinterpret_cast<char*>(ver), 2)) throw ArchiveError("truncated archive");
  const int version = ver[0] | ver[1] << 8;
  if (version != kArchiveVersion) throw ArchiveError("unsupported archive version " + std::to_string(version));

  Model m;
  try {
    m.system = parse_system(get_string(in));
  } catch (const std::invalid_argument& e) {
    throw ArchiveError(e.what());
  }
  std::map<std::string, std::string> fields;
  const std::uint32_t nf = get_u32(in);
  for (std::uint32_t i = 0; i < nf; ++i) {
    std::string k = get_string(in);
    fields[k] = get_string(in);
  }
  auto field = [&](const std::string& k) -> const std::string& {
    auto it = fields.find(k);
    if (it == fields.end()) throw ArchiveError("archive lacks hyperparameter " + k);
    return it->second;
  };
  m.hp.form_dim = parse_num<int>(field("form_dim"), "form_dim");
  m.hp.pos_dim = parse_num<int>(field("pos_dim"), "pos_dim");
  m.hp.hidden = parse_num<int>(field("hidden"), "hidden");
  m.hp.rnn_dim = parse_num<int>(field("rnn_dim"), "rnn_dim");
  m.hp.learning_rate = parse_num<double>(field("learning_rate"), "learning_rate");
  m.hp.explore_prob = parse_num<double>(field("explore_prob"), "explore_prob");
  m.hp.explore_from = parse_num<int>(field("explore_from"), "explore_from");
  m.hp.iterations = parse_num<int>(field("iterations"), "iterations");
  m.hp.seed = parse_num<std::uint64_t>(field("seed"), "seed");

  get_vocab(in, m.forms);
  get_vocab(in, m.pos);
  get_vocab(in, m.labels);

  const std::uint32_t nt = get_u32(in);
  auto& tensors = m.scorer.tensors();
  for (std::uint32_t i = 0; i < nt; ++i) {
    Scorer::Tensor t;
    t.name = get_string(in);
    const std::uint32_t rows = get_u32(in), cols = get_u32(in);
    if (static_cast<std::uint64_t>(rows) * cols > (1ull << 28)) throw ArchiveError("implausible tensor shape");
    t.value.resize(rows, cols);
    float* p = t.value.data();
    for (Eigen::Index k = 0; k < t.value.size(); ++k) p[k] = std::bit_cast<float>(get_u32(in));
    tensors.push_back(std::move(t));
  }
  try {
    m.scorer.restore(feature_arity(m.system), m.hp.rnn_dim);
  } catch (const std::invalid_argument& e) {
    throw ArchiveError(e.what());
  }
  if (m.scorer.actions() != m.actions().size()) throw ArchiveError("output layer does not match the label set");
  return m;
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArchiveError("cannot open " + path.string());
  return load_model(in);
}

int load_embeddings(Model& m, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArchiveError("cannot open " + path.string());
  const int dim = m.scorer.form_dim();
  std::string line;
  size_t lineno = 0;
  int set = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string form;
    ls >> form;
    std::vector<float> v;
    std::string tok;
    while (ls >> tok) v.push_back(parse_num<float>(tok, "embedding line " + std::to_string(lineno)));
    if (static_cast<int>(v.size()) != dim)
      throw ArchiveError(path.string() + ":" + std::to_string(lineno) + ": expected " + std::to_string(dim) +
                         " values, got " + std::to_string(v.size()));
    const int id = m.forms.id(form);
    if (id == Vocab::kUnk) continue;
    m.scorer.set_form_vector(id, Eigen::Map<const Eigen::VectorXf>(v.data(), dim));
    ++set;
  }
  return set;
}

}  // namespace twoplanar
