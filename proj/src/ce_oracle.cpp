// Chevalley-Eilenberg oracle for radical cohomology.
//
// V_λ is built inside ⊗_j Λ^{c_j}(Q^n), c_j the column lengths of λ - λ_n,
// as the span of everything reachable from the highest-weight vector by the
// simple lowering operators E_{i+1,i}. The radical acts through the exact
// matrices of E_{ab}, a < b, in that basis. Nothing here uses Weyl group
// combinatorics, so agreement with the Kostant route is a genuine check.

#include <bit>
#include <cstdint>
#include <deque>
#include <map>

#include "wcx/characters.hpp"
#include "wcx/errors.hpp"
#include "wcx/kostant.hpp"

namespace wcx {

namespace {

using AmbientKey = std::vector<std::uint32_t>;  // one bitmask per tensor factor
using AmbientVec = std::map<AmbientKey, Rational>;
using SparseCoords = std::vector<std::pair<int, Rational>>;

// E_ab acting on a pure tensor of wedge monomials: e_b ↦ e_a in one factor at a time.
AmbientVec apply_elementary(int a, int b, const AmbientVec& v) {
  AmbientVec out;
  const std::uint32_t bit_a = 1u << a, bit_b = 1u << b;
  for (auto& [key, coef] : v) {
    for (std::size_t f = 0; f < key.size(); ++f) {
      const std::uint32_t mask = key[f];
      if (!(mask & bit_b)) continue;
      if (a != b && (mask & bit_a)) continue;
      AmbientKey k2 = key;
      k2[f] = (mask & ~bit_b) | bit_a;
      const int lo = a < b ? a : b, hi = a < b ? b : a;
      const std::uint32_t between = (mask & ~bit_b) & (((1u << hi) - 1) & ~((1u << (lo + 1)) - 1));
      const int sign = (std::popcount(between) % 2) ? -1 : 1;
      auto& slot = out[k2];
      slot += sign * coef;
      if (slot == 0) out.erase(k2);
    }
  }
  return out;
}

class GlIrrep {
 public:
  GlIrrep(int n, const WeightVector& lambda) : n_(n), shift_(lambda.entries.back()) {
    std::vector<int> nu;
    for (int v : lambda.entries) nu.push_back(v - shift_);
    for (int j = 1; j <= nu.front(); ++j) {
      int len = 0;
      for (int v : nu) len += v >= j;
      columns_.push_back(len);
    }
    AmbientKey top;
    for (int c : columns_) top.push_back((1u << c) - 1);
    AmbientVec v0{{top, Rational(1)}};

    std::deque<AmbientVec> queue;
    if (insert(v0)) queue.push_back(v0);
    while (!queue.empty()) {
      AmbientVec v = std::move(queue.front());
      queue.pop_front();
      for (int i = 0; i + 1 < n_; ++i) {
        AmbientVec u = apply_elementary(i + 1, i, v);
        if (!u.empty() && insert(u)) queue.push_back(std::move(u));
      }
    }
  }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<int>& weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }

  /// Coordinates of E_ab · basis_j.
  SparseCoords act(int a, int b, int j) const { return coords(apply_elementary(a, b, basis_[static_cast<std::size_t>(j)])); }

 private:
  std::vector<int> key_weight(const AmbientKey& key) const {
    std::vector<int> w(static_cast<std::size_t>(n_), shift_);
    for (auto mask : key)
      for (int i = 0; i < n_; ++i)
        if (mask & (1u << i)) ++w[static_cast<std::size_t>(i)];
    return w;
  }

  // Reduces u against the echelon basis of its weight space; returns true and
  // stores the remainder when it is new.
  bool insert(AmbientVec u) {
    auto w = key_weight(u.begin()->first);
    auto& members = by_weight_[w];
    for (int idx : members) {
      auto it = u.find(pivots_[static_cast<std::size_t>(idx)]);
      if (it == u.end()) continue;
      const Rational f = it->second;
      for (auto& [k, c] : basis_[static_cast<std::size_t>(idx)]) {
        auto& slot = u[k];
        slot -= f * c;
        if (slot == 0) u.erase(k);
      }
    }
    if (u.empty()) return false;
    const AmbientKey piv = u.begin()->first;
    const Rational inv = Rational(1) / u.begin()->second;
    for (auto& [k, c] : u) c *= inv;
    // keep the weight space fully reduced so coordinates are read off pivots
    for (int idx : members) {
      auto& row = basis_[static_cast<std::size_t>(idx)];
      auto it = row.find(piv);
      if (it == row.end()) continue;
      const Rational f = it->second;
      for (auto& [k, c] : u) {
        auto& slot = row[k];
        slot -= f * c;
        if (slot == 0) row.erase(k);
      }
    }
    members.push_back(static_cast<int>(basis_.size()));
    basis_.push_back(std::move(u));
    pivots_.push_back(piv);
    weights_.push_back(std::move(w));
    return true;
  }

  SparseCoords coords(const AmbientVec& u) const {
    SparseCoords out;
    if (u.empty()) return out;
    auto found = by_weight_.find(key_weight(u.begin()->first));
    if (found == by_weight_.end()) throw InternalError("oracle: vector outside the module");
    AmbientVec residual = u;
    for (int idx : found->second) {
      auto it = u.find(pivots_[static_cast<std::size_t>(idx)]);
      if (it == u.end()) continue;
      out.emplace_back(idx, it->second);
      for (auto& [k, c] : basis_[static_cast<std::size_t>(idx)]) {
        auto& slot = residual[k];
        slot -= it->second * c;
        if (slot == 0) residual.erase(k);
      }
    }
    if (!residual.empty()) throw InternalError("oracle: module not closed under the radical action");
    return out;
  }

  int n_;
  int shift_;
  std::vector<int> columns_;
  std::vector<AmbientVec> basis_;
  std::vector<AmbientKey> pivots_;
  std::vector<std::vector<int>> weights_;
  std::map<std::vector<int>, std::vector<int>> by_weight_;
};

int rank_of(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

OracleReport chevalley_eilenberg(const BlockComposition& levi, const WeightVector& lambda, OracleLimits limits) {
  const int n = levi.n();
  if (lambda.size() != static_cast<std::size_t>(n)) throw InputError("oracle: weight length mismatch");
  const BlockComposition full({n});
  if (!dominant_for(full, lambda)) throw InputError("oracle: weight " + to_string(lambda) + " is not dominant");
  if (n > limits.max_rank) throw SizeBoundError("oracle: rank " + std::to_string(n) + " above cap " + std::to_string(limits.max_rank));
  const long long vdim = weyl_dim(full, lambda);
  if (vdim > limits.max_module_dim)
    throw SizeBoundError("oracle: dim V = " + std::to_string(vdim) + " above cap " + std::to_string(limits.max_module_dim));

  const GlIrrep module(n, lambda);
  if (module.dim() != vdim) throw InternalError("oracle: constructed module has the wrong dimension");

  const auto roots = levi.radical_roots();
  const int d = static_cast<int>(roots.size());
  // bracket[α][β] = (γ, c) with [x_α, x_β] = c x_γ, γ = -1 when zero
  std::vector<std::vector<std::pair<int, int>>> bracket(static_cast<std::size_t>(d), std::vector<std::pair<int, int>>(static_cast<std::size_t>(d), {-1, 0}));
  auto root_index = [&](int a, int b) {
    for (int i = 0; i < d; ++i)
      if (roots[static_cast<std::size_t>(i)] == std::pair{a, b}) return i;
    throw InternalError("oracle: radical not closed under brackets");
  };
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      auto [a, b] = roots[static_cast<std::size_t>(x)];
      auto [c, e] = roots[static_cast<std::size_t>(y)];
      if (b == c) bracket[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = {root_index(a, e), 1};
      else if (e == a) bracket[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = {root_index(c, b), -1};
    }

  std::vector<std::vector<SparseCoords>> action(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x)
    for (int j = 0; j < module.dim(); ++j)
      action[static_cast<std::size_t>(x)].push_back(module.act(roots[static_cast<std::size_t>(x)].first, roots[static_cast<std::size_t>(x)].second, j));

  // Cochains ξ^K ⊗ v_j, grouped by (degree, torus weight).
  using Cochain = std::pair<std::uint64_t, int>;
  auto cochain_weight = [&](std::uint64_t mask, int j) {
    std::vector<int> w = module.weight(j);
    for (int x = 0; x < d; ++x)
      if (mask & (1ull << x)) {
        --w[static_cast<std::size_t>(roots[static_cast<std::size_t>(x)].first)];
        ++w[static_cast<std::size_t>(roots[static_cast<std::size_t>(x)].second)];
      }
    return w;
  };
  std::vector<std::map<std::vector<int>, std::vector<Cochain>>> graded(static_cast<std::size_t>(d + 2));
  for (std::uint64_t mask = 0; mask < (1ull << d); ++mask)
    for (int j = 0; j < module.dim(); ++j)
      graded[static_cast<std::size_t>(std::popcount(mask))][cochain_weight(mask, j)].emplace_back(mask, j);

  auto position = [](std::uint64_t mask, int x) { return std::popcount(mask & ((1ull << x) - 1)); };

  // d(ξ^K ⊗ v_j) evaluated on sorted tuples.
  auto differential = [&](std::uint64_t mask, int j) {
    std::map<Cochain, Rational> out;
    for (int y = 0; y < d; ++y) {
      if (mask & (1ull << y)) continue;
      const std::uint64_t target = mask | (1ull << y);
      const int sign = position(target, y) % 2 ? -1 : 1;
      for (auto& [i, c] : action[static_cast<std::size_t>(y)][static_cast<std::size_t>(j)]) out[{target, i}] += sign * c;
    }
    for (int z = 0; z < d; ++z) {
      if (!(mask & (1ull << z))) continue;
      const std::uint64_t rest = mask & ~(1ull << z);
      const int sort_sign = position(rest, z) % 2 ? -1 : 1;  // (z, rest...) -> sorted
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
          auto [g, c] = bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          if (g != z || (rest & (1ull << a)) || (rest & (1ull << b))) continue;
          const std::uint64_t target = rest | (1ull << a) | (1ull << b);
          const int pa = position(target, a), pb = position(target, b);
          const int sign = ((pa + pb) % 2 ? -1 : 1) * sort_sign * c;
          out[{target, j}] += sign;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };

  // rank of d_k restricted to each weight
  std::vector<std::map<std::vector<int>, int>> ranks(static_cast<std::size_t>(d + 1));
  for (int k = 0; k < d; ++k) {
    for (auto& [w, cols] : graded[static_cast<std::size_t>(k)]) {
      auto found = graded[static_cast<std::size_t>(k + 1)].find(w);
      if (found == graded[static_cast<std::size_t>(k + 1)].end()) continue;
      const auto& rows = found->second;
      std::map<Cochain, std::size_t> row_of;
      for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
      std::vector<std::vector<Rational>> mat(rows.size(), std::vector<Rational>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (auto& [target, coef] : differential(cols[c].first, cols[c].second)) {
          auto it = row_of.find(target);
          if (it == row_of.end()) throw InternalError("oracle: differential does not preserve weight");
          mat[it->second][c] = coef;
        }
      ranks[static_cast<std::size_t>(k)][w] = rank_of(std::move(mat));
    }
  }

  OracleReport report;
  report.module_dim = vdim;
  report.cohomology = VirtualLeviModule(levi);
  for (int k = 0; k <= d; ++k) {
    long long cdim = 0, hdim = 0;
    std::map<std::vector<int>, long long> mults;
    for (auto& [w, cells] : graded[static_cast<std::size_t>(k)]) {
      cdim += static_cast<long long>(cells.size());
      long long h = static_cast<long long>(cells.size());
      if (auto it = ranks[static_cast<std::size_t>(k)].find(w); it != ranks[static_cast<std::size_t>(k)].end()) h -= it->second;
      if (k > 0)
        if (auto it = ranks[static_cast<std::size_t>(k - 1)].find(w); it != ranks[static_cast<std::size_t>(k - 1)].end()) h -= it->second;
      if (h < 0) throw InternalError("oracle: negative cohomology dimension");
      if (h > 0) mults[w] = h;
      hdim += h;
    }
    report.cochain_dims.push_back(cdim);
    report.cohomology_dims.push_back(hdim);
    for (auto& [hw, m] : decompose_character(levi, std::move(mults), lambda.sim)) {
      if (m < 0) throw InternalError("oracle: cohomology character is not effective");
      report.cohomology.add(hw, k, m);
    }
  }
  return report;
}

}  // namespace wcx
