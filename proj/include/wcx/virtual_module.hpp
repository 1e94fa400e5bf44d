#pragma once

#include <vector>

#include "wcx/root_datum.hpp"

namespace wcx {

/// One Levi-irreducible constituent placed in a cohomological degree.
struct LeviTerm {
  WeightVector weight;
  int degree = 0;
  long long mult = 1;

  friend bool operator==(const LeviTerm&, const LeviTerm&) = default;
};

/// Signed, graded multiset of irreducible representations of a standard
/// Levi, i.e. an element of its Grothendieck group with a degree grading.
///
/// Terms are kept canonical: merged on (degree, weight), zero multiplicities
/// dropped, ordered by (degree, weight lexicographic).
class VirtualLeviModule {
 public:
  VirtualLeviModule() = default;
  explicit VirtualLeviModule(BlockComposition levi) : levi_(std::move(levi)) {}
  /// Validates each weight (length and dominance for `levi`) and canonicalizes.
  VirtualLeviModule(BlockComposition levi, std::vector<LeviTerm> terms);

  const BlockComposition& levi() const { return levi_; }
  const std::vector<LeviTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds mult copies of the irreducible with highest weight `weight` in `degree`.
  void add(const WeightVector& weight, int degree, long long mult = 1);
  void add(const VirtualLeviModule& other, long long scale = 1);

  friend bool operator==(const VirtualLeviModule&, const VirtualLeviModule&) = default;

 private:
  void canonicalize();

  BlockComposition levi_;
  std::vector<LeviTerm> terms_;
};

}  // namespace wcx
