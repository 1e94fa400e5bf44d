#pragma once

// Run configuration: numeric substitutions for the symbolic factors of
// boundary classes (coset cardinalities, Γ Euler factors).
//
// File format: a flat JSON object.
//   "strict":                      bool
//   "format":                      "json" | "tsv"
//   "coset/<r>/<S>/<label>":       positive integer   (S as "1,2", "" for ∅)
//   "euler/<T>/<isotype>":         rational (number or "p/q"); isotype "*" matches all
//   "orbit/<S>/<label>":           positive integer   (representatives g_i of a trace term)

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wcx/rational.hpp"
#include "wcx/unitary.hpp"

namespace wcx {

enum class OutputFormat { Json, Tsv };

struct RunConfig {
  std::map<std::tuple<int, Subset, std::string>, long long> coset_cardinalities;
  std::map<std::pair<Subset, std::string>, Rational> euler_factors;
  std::map<std::pair<Subset, std::string>, long long> orbit_tokens;
  bool strict = false;
  OutputFormat format = OutputFormat::Json;

  /// Coset tokens for the term (r, S), sorted by label. Without entries the
  /// single token "p0" is used, numeric 1 unless strict (then symbolic).
  std::vector<CosetToken> coset_tokens(int r, const Subset& s) const;
  /// Representatives g_i for trace term S; default the single label "g0".
  std::vector<std::string> orbit_labels(const Subset& s) const;
  /// Euler factor for (T, isotype): exact key, then the "*" wildcard.
  std::optional<Rational> euler_factor(const Subset& t, const std::string& isotype) const;

  /// Canonical flat JSON text (sorted keys).
  std::string canonical() const;
  /// 16 hex digits of FNV-1a over canonical().
  std::string digest() const;

  /// Unknown keys are errors when strict (from the file or `force_strict`).
  static RunConfig parse(const std::string& text, bool force_strict = false);
  static RunConfig load(const std::string& path, bool force_strict = false);
};

}  // namespace wcx
