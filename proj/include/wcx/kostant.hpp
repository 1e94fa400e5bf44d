#pragma once

// Lie algebra cohomology of nilpotent radicals of standard parabolics,
// RΓ(Lie N_S, V_λ), as a graded virtual Levi module.
//
// Conventions: N_S is the upper block-triangular radical; H^0 is the space
// of N_S-invariants, whose Levi highest weight is λ itself. The Kostant route
// and the Chevalley-Eilenberg oracle must agree exactly on these conventions.

#include <vector>

#include "wcx/root_datum.hpp"
#include "wcx/unitary.hpp"
#include "wcx/virtual_module.hpp"

namespace wcx {

/// One constituent per minimal coset representative w of the Levi, placed
/// in degree length(w) with highest weight w·λ. Throws InputError unless λ
/// is dominant for GL_n.
VirtualLeviModule kostant_cohomology(const BlockComposition& levi, const WeightVector& lambda);
VirtualLeviModule kostant_cohomology(const GroupSignature& sig, const Subset& subset, const WeightVector& lambda);

struct OracleLimits {
  int max_rank = 4;
  long long max_module_dim = 200;
};

struct OracleReport {
  VirtualLeviModule cohomology;
  long long module_dim = 0;
  std::vector<long long> cochain_dims;     // dim Λ^k n^* ⊗ V, k = 0..dim n
  std::vector<long long> cohomology_dims;  // dim H^k
};

/// Brute-force cohomology of the Chevalley-Eilenberg complex Λ^• n^* ⊗ V_λ
/// in exact rational arithmetic, with each H^k split into Levi highest
/// weights. Throws SizeBoundError above `limits`, InputError on a
/// non-dominant λ.
OracleReport chevalley_eilenberg(const BlockComposition& levi, const WeightVector& lambda, OracleLimits limits = {});
OracleReport chevalley_eilenberg(const GroupSignature& sig, const Subset& subset, const WeightVector& lambda,
                                 OracleLimits limits = {});

VirtualLeviModule chevalley_eilenberg_oracle(const GroupSignature& sig, const Subset& subset, const WeightVector& lambda,
                                             OracleLimits limits = {});

/// Σ (-1)^degree · mult · dim, dimensions by the Weyl formula.
long long euler_dim(const VirtualLeviModule& vm);

/// Poincaré duality on radical cohomology: (k, μ) ↦ (dim n - k, -w0_L(μ) - Σ roots(n)),
/// sim negated. Maps RΓ(n, V_λ) onto RΓ(n, V_λ^*) and is an involution.
VirtualLeviModule poincare_dual(const VirtualLeviModule& vm);

}  // namespace wcx
