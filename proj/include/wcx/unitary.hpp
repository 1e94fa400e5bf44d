#pragma once

// Boundary data of GU(p,q): standard parabolics P_S for S ⊆ {1..q}, boundary
// strata, the weight profiles of weighted complexes and the chain expansion
// of the alternating-sum recursion.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcx/ext_int.hpp"
#include "wcx/root_datum.hpp"

namespace wcx {

struct GroupSignature {
  int p = 0;
  int q = 0;

  /// Throws InputError unless p >= q >= 1.
  GroupSignature(int p_, int q_);
  GroupSignature() = default;

  int n() const { return p + q; }
  friend bool operator==(const GroupSignature&, const GroupSignature&) = default;
};

std::string to_string(const GroupSignature& sig);

/// Sorted, duplicate-free subset of {1..q}.
using Subset = std::vector<int>;

/// "{1,2}" / "{}"
std::string to_string(const Subset& s);
/// "1,2" -> {1,2}; "" -> {}. Sorted and deduplicated.
Subset parse_subset(std::string_view text);
/// All 2^q subsets of {1..q}, ordered by (size, lexicographic).
std::vector<Subset> all_subsets(int q);

struct ParabolicData {
  Subset subset;
  BlockComposition levi_comp;
  std::vector<std::pair<int, int>> nilrad_roots;  // 0-based (i,j), i<j
  int rmax = 0;
};

/// Palindromic Levi composition (r1, r2-r1, ..., n-2rk, ..., r1); a zero middle
/// block is dropped. Throws InputError for elements outside {1..q}.
ParabolicData standard_parabolic(const GroupSignature& sig, const Subset& subset);

struct StratumInfo {
  int r = 0;
  int dim = 0;
  std::string group_desc;
};

std::vector<StratumInfo> strata(const GroupSignature& sig);

/// t_1..t_q, one extended integer per stratum.
struct WeightProfile {
  std::vector<ExtInt> t;

  std::size_t size() const { return t.size(); }
  ExtInt operator[](int r) const { return t.at(static_cast<std::size_t>(r - 1)); }  // 1-based
  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

std::string to_string(const WeightProfile& prof);
/// Comma list of integers, "inf" and "-inf".
WeightProfile parse_profile(std::string_view text);

/// (t, s) with t_r = r(r-n)+1 and s_r = r(r-n).
std::pair<WeightProfile, WeightProfile> ic_profiles(const GroupSignature& sig);

/// s_r = 1 - t_r + 2r(r-n); an involution.
WeightProfile dual_profile(const GroupSignature& sig, const WeightProfile& prof);

/// Sheaf-side thresholds (a_0, a_1, ..., a_q) for a representation of central
/// weight m: a_0 = -m + pq, a_r = -m - t_r + (p-r)(q-r).
std::vector<ExtInt> a_thresholds(const GroupSignature& sig, const WeightProfile& prof, int m);

struct ChainTerm {
  Subset chain;
  int sign = 1;
};

/// Every increasing chain in {1..q} (the empty one included) with sign
/// (-1)^length; ordered by (size, lexicographic).
std::vector<ChainTerm> chain_terms(int q);

/// Placeholder for an element of an adelic double quotient that cannot be
/// enumerated. A missing cardinality means it is still symbolic.
struct CosetToken {
  std::string label;
  std::optional<long long> cardinality;

  friend bool operator==(const CosetToken&, const CosetToken&) = default;
};

void validate_profile(const GroupSignature& sig, const WeightProfile& prof);

}  // namespace wcx
