#pragma once

// Freudenthal's recursion for weight multiplicities, used as an independent
// check on the character formulas.

#include <map>
#include <vector>

#include "wcx/characters.hpp"
#include "wcx/root_datum.hpp"

namespace wcx::oracle {

/// Weight multiplicities of the GL_b irreducible with highest weight
/// `lambda` (plain integer vector, weakly decreasing).
std::map<std::vector<int>, long long> freudenthal_gl(const std::vector<int>& lambda);

/// Blockwise product over a Levi; keys are full GL_n weights.
std::map<std::vector<int>, long long> freudenthal_multiplicities(const BlockComposition& comp, const WeightVector& mu);

/// Σ mult(ν) x^ν · sim^{mu.sim}, straight from the multiplicity table.
Laurent character_by_enumeration(const BlockComposition& comp, const WeightVector& mu, const TorusElement& x);

}  // namespace wcx::oracle
