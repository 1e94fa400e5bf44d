#pragma once

// Brute-force references used only by the tests.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "wcx/root_datum.hpp"
#include "wcx/virtual_module.hpp"

namespace wcx::testing {

inline int inversions(const std::vector<int>& perm) {
  int c = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) c += perm[i] > perm[j];
  return c;
}

/// Groups S_n into cosets {w u : u in W_L} (u permuting positions inside
/// blocks) and returns the unique shortest element of each coset.
inline std::vector<std::vector<int>> brute_min_coset_reps(const std::vector<int>& blocks) {
  const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<int>, std::vector<std::vector<int>>> cosets;
  do {
    auto key = perm;
    int start = 0;
    for (int b : blocks) {
      std::sort(key.begin() + start, key.begin() + start + b);
      start += b;
    }
    cosets[key].push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<int>> out;
  for (auto& [key, members] : cosets) {
    auto best = *std::min_element(members.begin(), members.end(),
                                  [](auto& a, auto& b) { return inversions(a) < inversions(b); });
    int ties = 0;
    for (auto& m : members) ties += inversions(m) == inversions(best);
    if (ties != 1) return {};
    out.push_back(best);
  }
  return out;
}

/// w(λ+ρ)-ρ written out coordinatewise, (w.v)_i = v_{w(i)}.
inline WeightVector brute_dot(const std::vector<int>& perm, const WeightVector& lambda) {
  const int n = static_cast<int>(perm.size());
  WeightVector out{std::vector<int>(static_cast<std::size_t>(n)), lambda.sim};
  for (int i = 0; i < n; ++i) out.entries[i] = lambda.entries[perm[i]] + (n - 1 - perm[i]) - (n - 1 - i);
  return out;
}

/// Every weakly decreasing vector of length n with entries in [lo, hi].
inline std::vector<std::vector<int>> decreasing_vectors(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(hi);
  return out;
}

inline std::vector<std::vector<int>> compositions(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= n; ++first)
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

}  // namespace wcx::testing
