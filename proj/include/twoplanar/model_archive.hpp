// A trained parser model and its binary archive format.
//
// Layout (all integers little-endian):
//   "2PLN"  u16 version
//   string system id
//   u32 count, then (string name, string value) hyperparameters
//   3 vocabularies (forms, POS, labels): u32 count, then strings
//   u32 count, then tensors: string name, u32 rows, u32 cols, f32 data
//     in column-major order
// Strings are u32 byte length followed by UTF-8 bytes.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "twoplanar/scorer.hpp"

namespace twoplanar {

inline constexpr std::uint16_t kArchiveVersion = 1;

class ArchiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Model {
  System system = System::TwoPlanar;
  Hyperparams hp;
  Vocab forms, pos, labels{false};
  Scorer scorer;

  ActionSpace actions() const { return ActionSpace(system, labels.size()); }
  EncodedSentence encode(const Sentence& s) const;

  bool operator==(const Model&) const = default;
};

// Vocabularies from a treebank and a freshly initialised scorer.
Model make_model(System system, const Hyperparams& hp, const std::vector<Sentence>& train);

void save_model(const Model& m, std::ostream& out);
void save_model(const Model& m, const std::filesystem::path& path);
Model load_model(std::istream& in);
Model load_model(const std::filesystem::path& path);

// Reads "form v1 ... vd" lines and overwrites the form embeddings of words
// in the vocabulary. Returns the number of words set. Throws ArchiveError
// on malformed lines or a dimension that differs from the model's.
int load_embeddings(Model& m, const std::filesystem::path& path);

}  // namespace twoplanar
