#pragma once

// Weight lattice, Weyl group and dot action for GL_n x GL_1, the absolute
// group underlying GU(p,q). Weights are integer vectors on the GL_n torus
// plus one integer on the similitude factor.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wcx {

struct WeightVector {
  std::vector<int> entries;
  int sim = 0;

  std::size_t size() const { return entries.size(); }
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

WeightVector operator+(const WeightVector& a, const WeightVector& b);
WeightVector operator-(const WeightVector& a, const WeightVector& b);

/// "(5,2,0;1)"
std::string to_string(const WeightVector& w);
/// Parses "5,2,0;1" or "5,2,0" (sim defaults to 0); surrounding parentheses allowed.
WeightVector parse_weight(std::string_view text);

/// A permutation of {0,...,n-1} in one-line notation. It acts on coordinate
/// vectors by (w.v)_i = v_{w(i)}.
class WeylElement {
 public:
  WeylElement() = default;
  /// Throws InputError unless `one_line` is a permutation of 0..n-1.
  explicit WeylElement(std::vector<int> one_line);

  static WeylElement identity(int n);

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& one_line() const { return perm_; }
  int operator[](int i) const { return perm_[static_cast<std::size_t>(i)]; }

  /// Inversion count.
  int length() const;
  WeylElement inverse() const;
  /// Composite such that apply(a*b, v) == apply(b, apply(a, v)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  std::vector<int> apply(std::span<const int> v) const;

  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> perm_;
};

/// Block sizes of a standard Levi of GL_n. Blocks are positive; the empty
/// composition (n = 0) is admitted for the degenerate hermitian part.
class BlockComposition {
 public:
  BlockComposition() = default;
  /// Throws InputError on a non-positive block.
  explicit BlockComposition(std::vector<int> blocks);

  const std::vector<int>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  int n() const;
  /// Start index of every block, plus n at the end.
  std::vector<int> offsets() const;
  /// Index of the block containing coordinate i.
  int block_of(int i) const;
  /// Absolute positive roots (i,j), i<j, lying in distinct blocks: the
  /// roots of the upper-triangular nilpotent radical.
  std::vector<std::pair<int, int>> radical_roots() const;
  /// (n^2 - sum b_i^2) / 2
  int radical_dim() const;
  /// True iff a block boundary sits after coordinate k (0 < k < n).
  bool has_boundary(int k) const;

  friend auto operator<=>(const BlockComposition&, const BlockComposition&) = default;
  friend bool operator==(const BlockComposition&, const BlockComposition&) = default;

 private:
  std::vector<int> blocks_;
};

std::string to_string(const BlockComposition& c);

/// Integer rho convention (n-1, ..., 1, 0), sim 0.
WeightVector rho(int n);

/// w(lambda + rho) - rho; sim unchanged. Throws InputError on length mismatch.
WeightVector dot_action(const WeylElement& w, const WeightVector& lambda);

/// Plain (linear) action on the GL_n coordinates; sim unchanged.
WeightVector act(const WeylElement& w, const WeightVector& lambda);

/// Minimal-length representatives of the cosets {w * u : u in W_L}, i.e. the
/// permutations whose one-line form increases inside every block. Sorted by
/// (length, one-line lexicographic).
std::vector<WeylElement> minimal_coset_reps(const BlockComposition& comp);

/// All n! permutations in lexicographic order.
std::vector<WeylElement> all_permutations(int n);

/// Longest element of W_L: reverses each block.
WeylElement longest_element(const BlockComposition& comp);

/// Entries weakly decreasing inside every block.
bool dominant_for(const BlockComposition& comp, const WeightVector& mu);

/// -w0_L(mu): negate and reverse within each block, sim negated.
WeightVector levi_dual(const BlockComposition& comp, const WeightVector& mu);

/// Sum of the roots of the radical of `comp`, as a weight with sim 0.
WeightVector radical_root_sum(const BlockComposition& comp);

}  // namespace wcx
