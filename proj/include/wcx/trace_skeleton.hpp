#pragma once

// Term list of the trace formula for weighted complexes: the Lie algebra
// cohomology traces are computed exactly, every arithmetic factor stays a
// symbol.

#include <map>
#include <string>
#include <vector>

#include "wcx/characters.hpp"
#include "wcx/config.hpp"
#include "wcx/truncation.hpp"
#include "wcx/unitary.hpp"
#include "wcx/virtual_module.hpp"

namespace wcx {

struct OrbitalPlaceholder {
  std::string token;     // g_i
  std::string orbital;   // O_gamma(f_{g_i})
  std::string volume;    // vol(...)^-1

  friend bool operator==(const OrbitalPlaceholder&, const OrbitalPlaceholder&) = default;
};

struct TracePlaceholders {
  std::string c_factor;
  std::string euler_chi;
  std::string twisted_orbital;
  std::vector<OrbitalPlaceholder> orbital_sum;

  friend bool operator==(const TracePlaceholders&, const TracePlaceholders&) = default;
};

struct TraceTerm {
  Subset S;
  int s = 0;                       // max(S), 0 for ∅
  TorusElement gamma0;
  TruncationSpec truncation;       // {≥ t_s+m : s ∈ S}
  VirtualLeviModule cohomology;    // untruncated RΓ(Lie N_S, V)
  Laurent computed_trace;
  TracePlaceholders placeholders;

  friend bool operator==(const TraceTerm&, const TraceTerm&) = default;
};

/// One term per S ⊆ {1..q}, ordered by (|S|, S). gamma0s maps s to the
/// torus element used by every term with max(S) = s (identity if absent).
std::vector<TraceTerm> assemble_terms(const GroupSignature& sig, const WeightVector& lambda, const WeightProfile& prof,
                                      const std::map<int, TorusElement>& gamma0s, const RunConfig& cfg = {});

struct TraceSubTerm {
  Subset J;
  int sign = 1;
  TruncationSpec truncation;  // {< t_j+m : j ∈ J}
  Laurent computed_trace;

  friend bool operator==(const TraceSubTerm&, const TraceSubTerm&) = default;
};

/// The 2^|S| sub-terms Σ_{J⊆S} (-1)^|J| Tr(γ0, RΓ_{<t_j+m, j∈J}). Throws
/// InputError for S = ∅.
std::vector<TraceSubTerm> inclusion_exclusion_expand(const TraceTerm& term);

/// Σ sign · computed_trace over the sub-terms.
Laurent signed_sum(const std::vector<TraceSubTerm>& subs);

}  // namespace wcx
