// CoNLL-X treebank reading and writing.
//
// Sentences are stored 1-based: token i of the file is tokens[i - 1] and
// carries id i. Position 0 is the artificial root and has no Token entry.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace twoplanar {

struct Token {
  int id = 0;
  std::string form;
  std::string lemma = "_";
  std::string cpos = "_";
  std::string pos = "_";
  std::string feats = "_";
  int head = 0;
  std::string deprel = "_";
  std::string phead = "_";
  std::string pdeprel = "_";

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  const Token& at(int id) const { return tokens.at(static_cast<size_t>(id - 1)); }
  Token& at(int id) { return tokens.at(static_cast<size_t>(id - 1)); }

  // heads()[k] is the head of node k; heads()[0] = -1 for the root.
  std::vector<int> heads() const;
  std::vector<std::string> labels() const;

  bool operator==(const Sentence&) const = default;
};

class ConllError : public std::runtime_error {
 public:
  ConllError(const std::string& what, size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

std::vector<Sentence> read_conll(std::istream& in);
std::vector<Sentence> read_conll(const std::filesystem::path& path);

void write_conll(const std::vector<Sentence>& sentences, std::ostream& out);
void write_conll(const std::vector<Sentence>& sentences, const std::filesystem::path& path);

// Builds a sentence from a head vector (heads[0] ignored). Forms default to
// "w<i>", labels to "dep".
Sentence make_sentence(const std::vector<int>& heads,
                       const std::vector<std::string>& labels = {});

}  // namespace twoplanar
