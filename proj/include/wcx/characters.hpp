#pragma once

// Exact characters of (virtual) Levi modules at torus elements.

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "wcx/laurent.hpp"
#include "wcx/root_datum.hpp"
#include "wcx/unitary.hpp"
#include "wcx/virtual_module.hpp"

namespace wcx {

/// diag(x_1..x_n) together with a similitude value. Every coordinate must be
/// a unit of the Laurent ring: a nonzero rational times a monomial.
struct TorusElement {
  std::vector<Laurent> entries;
  Laurent sim = Laurent(1);

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const TorusElement&, const TorusElement&) = default;

  static TorusElement identity(int n);
  /// (t1, ..., tn; u)
  static TorusElement generic(int n, const std::string& prefix = "t", const std::string& sim_name = "u");
};

/// Throws InputError if a coordinate is not a unit.
void validate(const TorusElement& x);
std::string to_string(const TorusElement& x);
/// "t1,t2,t3;u", "2,1/3,5;1", "2*t1,t2;u"; sim defaults to 1.
TorusElement parse_torus(std::string_view text);

/// Embeds a torus element (mid entries; c) of the boundary group of stratum s
/// as diag(c I_s, mid, I_s) with similitude c.
TorusElement embed_boundary(const GroupSignature& sig, int s, const std::vector<Laurent>& mid, const Laurent& c);

/// Weyl dimension formula per block. Throws InputError on a non-dominant weight.
long long weyl_dim(const BlockComposition& comp, const WeightVector& mu);

/// Weight multiplicities of the Levi irreducible with highest weight mu,
/// counted by Gelfand-Tsetlin patterns block by block. Keys are GL_n weights
/// (the sim coordinate is carried by mu.sim).
std::map<std::vector<int>, long long> weight_multiplicities(const BlockComposition& comp, const WeightVector& mu);

/// Splits a (virtual) weight-multiplicity table into Levi highest weights by
/// repeatedly peeling off the extremal weight. Throws InternalError if the
/// table is not a combination of irreducible characters.
std::vector<std::pair<WeightVector, long long>> decompose_character(
    const BlockComposition& comp, std::map<std::vector<int>, long long> mults, int sim);

/// Restriction of the irreducible of `from` with highest weight mu to the
/// finer standard Levi `to`.
std::vector<std::pair<WeightVector, long long>> branch(
    const BlockComposition& from, const WeightVector& mu, const BlockComposition& to);

enum class CharacterMethod {
  Auto,         ///< bialternant for distinct numeric entries, Jacobi-Trudi otherwise
  Bialternant,  ///< ratio of alternants only; throws when the denominator vanishes
  JacobiTrudi,  ///< determinant of complete homogeneous polynomials
};

/// Blockwise Weyl character of the Levi irreducible with highest weight mu,
/// times sim^{mu.sim}.
Laurent character(const BlockComposition& comp, const WeightVector& mu, const TorusElement& x,
                  CharacterMethod method = CharacterMethod::Auto);

/// sum over terms of mult * (-1)^degree * character.
Laurent trace_virtual(const VirtualLeviModule& vm, const TorusElement& x,
                      CharacterMethod method = CharacterMethod::Auto);

}  // namespace wcx
