#pragma once

// Command dispatch shared by the command line tool and the Python module.

#include <cstdint>
#include <string>
#include <vector>

#include "bracekit/cli/spec.hpp"

namespace bracekit::cli {

enum ExitCode : int {
  kOk = 0,
  kPrecondition = 2,
  kVerification = 3,
  kInput = 4,
};

struct Options {
  std::string construction = "main";
  std::uint64_t seed = 0;
  std::size_t guard_aut = kAutomorphismGuard;
  std::size_t max_order = kMaxGroupOrder;
  std::size_t guard_search = 8;
  std::vector<std::string> evals;
  bool timing = false;
};

struct Outcome {
  json report;
  int exit_code = kOk;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"analyze", "decompose", "build",
                                          "ybe",     "search",    "verify"};
  return c;
}

inline const std::vector<std::string>& constructions() {
  static const std::vector<std::string> c{"trivial", "trivial-skew", "class2",
                                          "tower",   "tower-skew",   "main",
                                          "main-even", "main-skew"};
  return c;
}

/// Reads a JSON document from `arg` when it names a file, otherwise treats
/// `arg` as a preset expression. "-" reads standard input.
json load_input(const std::string& arg);

/// Builds the brace named by `construction` on `g`.
Brace build_brace(const FiniteGroup& g, const std::string& construction,
                  std::uint64_t seed);

/// Never throws for library errors: failures are reported in the document
/// ("status", "error") and mapped to the exit code.
Outcome run(const std::string& command, const json& input, const Options& opts);

}  // namespace bracekit::cli
