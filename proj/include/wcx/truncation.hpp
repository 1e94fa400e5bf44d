#pragma once

// Central weights and truncation by weights of the split centres S_r.
//
// S_r = {diag(λ² I_r, λ I_{n-2r}, I_r)} with similitude λ²; its weight on
// μ = (entries; sim) is 2·Σ_{i≤r} μ_i + Σ_{r<i≤n-r} μ_i + 2·sim.

#include <map>
#include <optional>
#include <utility>

#include "wcx/ext_int.hpp"
#include "wcx/root_datum.hpp"
#include "wcx/unitary.hpp"
#include "wcx/virtual_module.hpp"

namespace wcx {

/// Pairing with the cocharacter λ ↦ λ·I_n (similitude λ²): Σ entries + 2·sim.
int central_weight(const WeightVector& lambda);

/// S_r-weight of μ. Throws InputError unless 1 ≤ r ≤ q.
int s_weight(const GroupSignature& sig, int r, const WeightVector& mu);
/// Same, using only n = length of μ; r must satisfy 1 ≤ 2r ≤ n.
int s_weight(int r, const WeightVector& mu);

/// Constraints "S_r-weight ≥ bound" (at_least) and "S_s-weight < bound" (below).
struct TruncationSpec {
  std::map<int, ExtInt> at_least;
  std::map<int, ExtInt> below;

  bool empty() const { return at_least.empty() && below.empty(); }
  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;

  /// {≥ lower at r, < bound_s at s} with every s < r: the shape used by
  /// boundary restrictions. Throws InputError otherwise.
  static TruncationSpec restriction(int r, ExtInt lower, std::map<int, ExtInt> uppers);
};

std::string to_string(const TruncationSpec& spec);

/// True when a weight satisfies every constraint.
bool satisfies(const TruncationSpec& spec, const WeightVector& mu);

/// Keeps exactly the constituents whose S_r-weights satisfy every
/// constraint. Throws InputError if some S_r is not central in the Levi of vm.
VirtualLeviModule truncate(const VirtualLeviModule& vm, const TruncationSpec& spec);

/// (w_{<t}, w_{≥t}) at stratum r.
std::pair<VirtualLeviModule, VirtualLeviModule> split(const VirtualLeviModule& vm, ExtInt t, int r);

/// Checks vm_{≥t_s, s∈S} = Σ_{J⊆S} (-1)^|J| vm_{<t_j, j∈J} as virtual modules.
bool inclusion_exclusion_check(const VirtualLeviModule& vm, const std::map<int, ExtInt>& bounds);

/// Throws InputError unless S_r is central in the Levi `comp` (block
/// boundaries at r and n-r).
void require_central(const BlockComposition& comp, int r);

}  // namespace wcx
