#pragma once

// Grothendieck-group classes of restrictions of weighted complexes to a
// boundary stratum, their duality transform and numeric evaluation.

#include <optional>
#include <string>
#include <vector>

#include "wcx/config.hpp"
#include "wcx/rational.hpp"
#include "wcx/truncation.hpp"
#include "wcx/unitary.hpp"
#include "wcx/virtual_module.hpp"

namespace wcx {

/// One Levi constituent split along L_{S∪{r}} = (linear blocks) × G_r:
/// hermitian = middle coordinates with the similitude, linear = the paired
/// outer coordinates (sim 0).
struct SplitPair {
  WeightVector hermitian;
  WeightVector linear;

  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

std::vector<SplitPair> split_pairs(const VirtualLeviModule& vm, int r);
/// Comma-joined linear coordinates, the key of Euler substitutions.
std::string isotype_label(const SplitPair& sp);

struct StratumTerm {
  Subset S;
  int sign = 1;
  CosetToken coset;
  VirtualLeviModule module;
  std::vector<SplitPair> split_pairs;  // parallel to module.terms()
  TruncationSpec truncation;           // constraints the module satisfies
  std::string gamma_tag;
  std::optional<Rational> gamma_euler;
  std::string ind_tag;

  friend bool operator==(const StratumTerm&, const StratumTerm&) = default;
};

struct StratumClass {
  GroupSignature sig;
  int r = 1;
  WeightVector lambda;
  WeightProfile profile;
  int central = 0;      // m
  bool dualized = false;
  int shift = 0;        // cohomological shift [2pq] once dualized
  int twist = 0;        // Tate twist (pq) once dualized
  std::vector<StratumTerm> terms;

  friend bool operator==(const StratumClass&, const StratumClass&) = default;
};

/// One term per (S ⊆ {1..r-1}, coset token), ordered by (|S|, S, label):
/// sign (-1)^|S| and module RΓ(Lie N_{S∪{r}}, V_λ) truncated to
/// {≥ t_r+m, < t_s+m for s ∈ S}.
StratumClass restrict_weighted(const GroupSignature& sig, const WeightVector& lambda, const WeightProfile& prof, int r,
                               const RunConfig& cfg = {});

enum class ComparisonLevel {
  TermEqual,       ///< identical ordered term lists
  EvaluatedEqual,  ///< equal after evaluate_class
  Different,
  Undetermined,    ///< evaluation impossible (missing substitutions)
};

std::string to_string(ComparisonLevel level);
ComparisonLevel parse_comparison_level(std::string_view text);

struct IcComparison {
  StratumClass t_class;
  StratumClass s_class;
  ComparisonLevel level = ComparisonLevel::Different;
  std::string report;
};

/// Same (S, sign, coset, module) sequence; profiles and bounds may differ.
bool same_terms(const StratumClass& a, const StratumClass& b);

/// Restriction under both intersection-complex profiles, compared at the
/// finest level where they agree.
IcComparison restrict_ic(const GroupSignature& sig, const WeightVector& lambda, int r, const RunConfig& cfg = {});

/// Poincaré duality on every term module (signs and tokens kept), the dual
/// profile, λ ↦ -w0(λ), m ↦ -m, and the shift/twist metadata toggled. The
/// recorded truncation becomes the one the dual module satisfies.
StratumClass duality_transform(const StratumClass& sc);

/// Signed merge of every term onto the finest common Levi, weighted by the
/// coset cardinality and the Euler factor of (S∪{r}, linear isotype).
/// Missing substitutions default to 1 unless cfg.strict (MissingSubstitution).
VirtualLeviModule evaluate_class(const StratumClass& sc, const RunConfig& cfg = {});

/// Finest standard Levi refining every given composition of the same n.
BlockComposition common_refinement(const std::vector<BlockComposition>& comps);

}  // namespace wcx
