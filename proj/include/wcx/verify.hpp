#pragma once

// Self-verification suites: each checks one family of exact properties
// against independent oracles and reports pass/fail with a short detail.

#include <string>
#include <vector>

namespace wcx {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// kostant, census, truncation, middleweight, duality, characters, trace, determinism
const std::vector<std::string>& suite_names();

/// Throws InputError on an unknown name.
SuiteResult run_suite(const std::string& name);

}  // namespace wcx

#include "wcx/commands.hpp"

namespace wcx {

/// A command invocation whose output is frozen in the golden corpus.
struct GoldenCase {
  std::string name;     // file stem
  std::string command;
  CommandOptions options;
};

/// GU(2,1), GU(2,2), GU(3,1): info, Kostant tables, IC restrictions and traces.
std::vector<GoldenCase> golden_corpus();

/// Parses a JSON document emitted by `command`, rebuilds the typed objects
/// and serializes them again; true iff the text is reproduced exactly.
bool round_trips(const std::string& command, const std::string& json_text, std::string* why = nullptr);

}  // namespace wcx
