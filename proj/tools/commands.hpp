#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcgrep/word.hpp"

namespace mcgrep::cli {

enum ExitCode : int { ok = 0, distinct = 1, failed = 1, usage = 2 };

struct Options {
  std::string group = "braid";
  int n = 0;
  int g = 0;
  bool rescaled = false;
  std::string out;
  std::string file;
  std::vector<std::string> words;
  std::uint64_t seed = 1;
  std::size_t length = 10;
  std::size_t trials = 1;
  bool blocks = false;
};

// Throws std::invalid_argument on a bad selector.
Context make_context(const Options& opt);

// Inline words, or the non-comment lines of --file when no words were given.
std::vector<std::string> input_words(const Options& opt);

int cmd_eval(const Options& opt, std::ostream& out);
int cmd_equal(const Options& opt, std::ostream& out);
int cmd_verify(const Options& opt, std::ostream& out);
int cmd_export(const Options& opt, std::ostream& out);
int cmd_bench(const Options& opt, std::ostream& out);

}  // namespace mcgrep::cli
