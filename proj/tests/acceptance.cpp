// Acceptance run: one line per criterion. With an argument k, only
// criterion k runs (used to register each criterion as its own test).

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wcx/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
};

constexpr std::array<Criterion, 8> kCriteria{{
    {1, "Kostant and Chevalley-Eilenberg agree", "kostant"},
    {2, "census invariants", "census"},
    {3, "truncation algebra", "truncation"},
    {4, "middle-weight avoidance and IC profile equality", "middleweight"},
    {5, "duality of restricted classes", "duality"},
    {6, "characters against weight enumeration", "characters"},
    {7, "trace-skeleton identities", "trace"},
    {8, "determinism and round trips", "determinism"},
}};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(WCX_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
  }
  return out;
}

// The on-disk corpus must parse back, match fresh output, and the CLI
// binary must print identical bytes on repeated runs.
wcx::SuiteResult corpus_checks(wcx::SuiteResult r) {
  const std::filesystem::path dir = WCX_GOLDEN_DIR;
  int files = 0;
  std::string problem;
  for (const auto& gc : wcx::golden_corpus()) {
    const auto text = slurp(dir / (gc.name + ".json"));
    ++files;
    std::string why;
    if (text != wcx::run_command(gc.command, gc.options).out) problem = gc.name + ": differs from the golden file";
    else if (!wcx::round_trips(gc.command, text, &why)) problem = gc.name + ": " + why;
    if (!problem.empty()) break;
  }
  const std::string args[] = {
      "restrict --p 2 --q 2 --lambda 0,0,0,0 --ic --stratum 2",
      "trace --p 3 --q 1 --lambda 1,0,0,0 --ic --gamma0 t1,t2,t3,t4;u",
      "kostant --p 2 --q 1 --subset 1 --lambda 0,0,0 --oracle --format tsv",
  };
  int cli = 0;
  for (const auto& a : args) {
    const auto first = run_cli(a), second = run_cli(a);
    cli += 2;
    if (first.empty() || first != second) problem = "CLI output not reproducible for '" + a + "'";
  }
  r.detail += "; " + std::to_string(files) + " golden files parsed back and matched; " + std::to_string(cli) +
              " CLI process runs";
  if (!problem.empty()) {
    r.passed = false;
    r.detail += "; " + problem;
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::stoi(argv[1]);
  int failed = 0;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    auto r = wcx::run_suite(c.suite);
    if (c.id == 8) r = corpus_checks(r);
    std::printf("[%s] %d. %s (%.1fs): %s\n", r.passed ? "PASS" : "FAIL", c.id, c.title, r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  return failed ? 1 : 0;
}
