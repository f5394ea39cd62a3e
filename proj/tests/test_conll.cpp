#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "twoplanar/conll.hpp"
#include "twoplanar/treegen.hpp"

using namespace twoplanar;

namespace {

std::vector<Sentence> read_string(const std::string& text) {
  std::istringstream in(text);
  return read_conll(in);
}

size_t error_line(const std::string& text) {
  try {
    read_string(text);
  } catch (const ConllError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("conll") {

TEST_CASE("reads a two-token sentence") {
  auto s = read_string("1\tdog\t_\tN\tN\t_\t2\tsubj\t_\t_\n2\tbarks\t_\tV\tV\t_\t0\troot\t_\t_\n");
  REQUIRE(s.size() == 1);
  CHECK(s[0].heads() == std::vector<int>{-1, 2, 0});
  CHECK(s[0].at(1).form == "dog");
  CHECK(s[0].at(2).deprel == "root");
  CHECK(s[0].at(1).feats == "_");
}

TEST_CASE("empty input gives no sentences") {
  CHECK(read_string("").empty());
  CHECK(read_string("\n\n").empty());
}

TEST_CASE("malformed lines report their line number") {
  CHECK(error_line("1\tdog\t_\tN\tN\t_\t0\troot\t_\n") == 1);
  CHECK(error_line("1\ta\t_\tN\tN\t_\t0\troot\t_\t_\n2\tb\t_\tN\tN\t_\tx\tdep\t_\t_\n") == 2);
  // head out of range
  CHECK(error_line("1\ta\t_\tN\tN\t_\t0\troot\t_\t_\n2\tb\t_\tN\tN\t_\t3\tdep\t_\t_\n") == 2);
  // ids out of sequence
  CHECK(error_line("1\ta\t_\tN\tN\t_\t0\troot\t_\t_\n3\tb\t_\tN\tN\t_\t1\tdep\t_\t_\n") == 2);
  // multi-word range
  CHECK(error_line("1-2\tab\t_\t_\t_\t_\t_\t_\t_\t_\n") == 1);
}

TEST_CASE("cyclic heads are rejected") {
  CHECK_THROWS_AS(read_string("1\ta\t_\tN\tN\t_\t2\tdep\t_\t_\n2\tb\t_\tN\tN\t_\t1\tdep\t_\t_\n"), ConllError);
  CHECK_THROWS_AS(read_string("1\ta\t_\tN\tN\t_\t1\tdep\t_\t_\n"), ConllError);
}

TEST_CASE("comment lines are skipped") {
  auto s = read_string("# sent_id = 1\n1\ta\t_\tN\tN\t_\t0\troot\t_\t_\n\n# x\n1\tb\t_\tN\tN\t_\t0\troot\t_\t_\n");
  CHECK(s.size() == 2);
}

TEST_CASE("multiple roots survive a round trip unchanged") {
  const std::string text = "1\ta\t_\tN\tN\t_\t0\troot\t_\t_\n2\tb\t_\tN\tN\t_\t0\troot\t_\t_\n\n";
  auto s = read_string(text);
  std::ostringstream out;
  write_conll(s, out);
  CHECK(out.str() == text);
}

TEST_CASE("round trip preserves all ten columns") {
  SyntheticTreebankOptions opts;
  opts.sentences = 200;
  opts.extraposition = 0.5;
  auto sents = synthetic_treebank(opts);
  sents[0].tokens[0].feats = "Case=Nom|Num=Sg";
  sents[0].tokens[0].phead = "3";
  sents[0].tokens[0].pdeprel = "x";
  std::stringstream buf;
  write_conll(sents, buf);
  CHECK(read_conll(buf) == sents);
}

TEST_CASE("file round trip and unwritable paths") {
  auto sents = std::vector<Sentence>{make_sentence({-1, 2, 0, 2})};
  const auto path = std::filesystem::temp_directory_path() / "twoplanar_conll_test.conll";
  write_conll(sents, path);
  CHECK(read_conll(path) == sents);
  std::filesystem::remove(path);
  CHECK_THROWS(write_conll(sents, std::filesystem::path("/nonexistent-dir/x/out.conll")));
  CHECK_THROWS(read_conll(std::filesystem::path("/nonexistent-dir/in.conll")));
}

}
