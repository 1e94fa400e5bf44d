#include "wcx/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wcx/errors.hpp"

namespace wcx {

TorusElement TorusElement::identity(int n) {
  return TorusElement{std::vector<Laurent>(static_cast<std::size_t>(n), Laurent(1)), Laurent(1)};
}

TorusElement TorusElement::generic(int n, const std::string& prefix, const std::string& sim_name) {
  TorusElement x;
  for (int i = 1; i <= n; ++i) x.entries.push_back(Laurent::variable(prefix + std::to_string(i)));
  x.sim = Laurent::variable(sim_name);
  return x;
}

void validate(const TorusElement& x) {
  for (auto& e : x.entries)
    if (!e.is_unit()) throw InputError("torus coordinate is not invertible: " + e.to_string());
  if (!x.sim.is_unit()) throw InputError("torus similitude is not invertible: " + x.sim.to_string());
}

std::string to_string(const TorusElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + x.entries[i].to_string();
  return out + ";" + x.sim.to_string();
}

TorusElement parse_torus(std::string_view text) {
  TorusElement x;
  auto semi = text.find(';');
  auto body = text.substr(0, semi);
  x.sim = semi == std::string_view::npos ? Laurent(1) : Laurent::parse(text.substr(semi + 1));
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    x.entries.push_back(Laurent::parse(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  validate(x);
  return x;
}

TorusElement embed_boundary(const GroupSignature& sig, int s, const std::vector<Laurent>& mid, const Laurent& c) {
  if (s < 0 || s > sig.q) throw InputError("embed_boundary: stratum out of range");
  if (mid.size() != static_cast<std::size_t>(sig.n() - 2 * s)) throw InputError("embed_boundary: wrong middle length");
  TorusElement x;
  for (int i = 0; i < s; ++i) x.entries.push_back(c);
  x.entries.insert(x.entries.end(), mid.begin(), mid.end());
  for (int i = 0; i < s; ++i) x.entries.emplace_back(1);
  x.sim = c;
  validate(x);
  return x;
}

namespace {

std::vector<int> block_slice(const std::vector<int>& v, int begin, int end) {
  return {v.begin() + begin, v.begin() + end};
}

void require_dominant(const BlockComposition& comp, const WeightVector& mu) {
  if (!dominant_for(comp, mu))
    throw InputError("weight " + to_string(mu) + " is not dominant for Levi " + to_string(comp));
}

// Gelfand-Tsetlin enumeration for one GL_b block.
void gt_block(const std::vector<int>& top, std::map<std::vector<int>, long long>& out) {
  const int b = static_cast<int>(top.size());
  std::vector<int> weight(static_cast<std::size_t>(b), 0);
  std::function<void(const std::vector<int>&, int)> descend = [&](const std::vector<int>& row, int len) {
    // row has length len; the weight coordinate len-1 is sum(row) - sum(next row)
    const int row_sum = std::accumulate(row.begin(), row.end(), 0);
    if (len == 1) {
      weight[0] = row_sum;
      ++out[weight];
      return;
    }
    std::vector<int> next(static_cast<std::size_t>(len - 1));
    std::function<void(int)> fill = [&](int i) {
      if (i == len - 1) {
        weight[static_cast<std::size_t>(len - 1)] = row_sum - std::accumulate(next.begin(), next.end(), 0);
        descend(next, len - 1);
        return;
      }
      for (int v = row[static_cast<std::size_t>(i + 1)]; v <= row[static_cast<std::size_t>(i)]; ++v) {
        next[static_cast<std::size_t>(i)] = v;
        fill(i + 1);
      }
    };
    fill(0);
  };
  if (b == 0) {
    ++out[{}];
    return;
  }
  descend(top, b);
}

Rational det_rational(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

Laurent det_laurent(const std::vector<std::vector<Laurent>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Laurent(1);
  if (n == 1) return a[0][0];
  Laurent out;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<Laurent>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Laurent> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Laurent term = a[0][j] * det_laurent(minor);
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

Rational rational_pow(const Rational& x, int e) {
  Rational base = e < 0 ? Rational(1) / x : x;
  Rational out(1);
  for (int k = 0; k < std::abs(e); ++k) out *= base;
  return out;
}

// Returns false if the Vandermonde denominator vanishes.
bool bialternant_block(const std::vector<int>& mu, const std::vector<Rational>& x, Rational& result) {
  const std::size_t b = mu.size();
  std::vector<std::vector<Rational>> num(b, std::vector<Rational>(b)), den(b, std::vector<Rational>(b));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const int shift = static_cast<int>(b - 1 - i);
      num[i][j] = rational_pow(x[j], mu[i] + shift);
      den[i][j] = rational_pow(x[j], shift);
    }
  const Rational d = det_rational(den);
  if (d == 0) return false;
  result = det_rational(num) / d;
  return true;
}

Laurent jacobi_trudi_block(const std::vector<int>& mu, const std::vector<Laurent>& x) {
  const std::size_t b = mu.size();
  if (b == 0) return Laurent(1);
  const int base = mu.back();
  std::vector<int> nu;
  for (int v : mu)
    if (v - base > 0) nu.push_back(v - base);
  const int len = static_cast<int>(nu.size());
  const int kmax = len == 0 ? 0 : nu[0] + len - 1;
  // h[k] = complete homogeneous symmetric polynomial of degree k in x_1..x_b
  std::vector<Laurent> h(static_cast<std::size_t>(kmax + 1));
  h[0] = Laurent(1);
  for (std::size_t j = 0; j < b; ++j)
    for (int k = 1; k <= kmax; ++k) h[static_cast<std::size_t>(k)] += x[j] * h[static_cast<std::size_t>(k - 1)];
  std::vector<std::vector<Laurent>> m(static_cast<std::size_t>(len), std::vector<Laurent>(static_cast<std::size_t>(len)));
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) {
      const int k = nu[static_cast<std::size_t>(i)] - i + j;
      if (k >= 0) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(k)];
    }
  Laurent det_x(1);
  for (auto& e : x) det_x *= e;
  return det_laurent(m) * det_x.pow(base);
}

}  // namespace

long long weyl_dim(const BlockComposition& comp, const WeightVector& mu) {
  require_dominant(comp, mu);
  const auto off = comp.offsets();
  Rational dim(1);
  for (std::size_t b = 0; b + 1 < off.size(); ++b)
    for (int i = off[b]; i < off[b + 1]; ++i)
      for (int j = i + 1; j < off[b + 1]; ++j)
        dim *= Rational(mu.entries[static_cast<std::size_t>(i)] - mu.entries[static_cast<std::size_t>(j)] + j - i, j - i);
  if (denominator(dim) != 1) throw InternalError("weyl_dim: non-integral dimension");
  return numerator(dim).convert_to<long long>();
}

std::map<std::vector<int>, long long> weight_multiplicities(const BlockComposition& comp, const WeightVector& mu) {
  require_dominant(comp, mu);
  const auto off = comp.offsets();
  std::map<std::vector<int>, long long> acc{{{}, 1}};
  for (std::size_t b = 0; b + 1 < off.size(); ++b) {
    std::map<std::vector<int>, long long> block;
    gt_block(block_slice(mu.entries, off[b], off[b + 1]), block);
    std::map<std::vector<int>, long long> next;
    for (auto& [wa, ma] : acc)
      for (auto& [wb, mb] : block) {
        auto w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        next[w] += ma * mb;
      }
    acc = std::move(next);
  }
  return acc;
}

std::vector<std::pair<WeightVector, long long>> decompose_character(
    const BlockComposition& comp, std::map<std::vector<int>, long long> mults, int sim) {
  std::erase_if(mults, [](const auto& kv) { return kv.second == 0; });
  // f is strictly positive on every positive root of the Levi
  const auto off = comp.offsets();
  std::vector<long long> f(static_cast<std::size_t>(comp.n()));
  for (std::size_t b = 0; b + 1 < off.size(); ++b)
    for (int i = off[b]; i < off[b + 1]; ++i) f[static_cast<std::size_t>(i)] = off[b + 1] - 1 - i;
  auto score = [&](const std::vector<int>& w) {
    long long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += f[i] * w[i];
    return s;
  };
  std::vector<std::pair<WeightVector, long long>> out;
  while (!mults.empty()) {
    auto best = mults.begin();
    for (auto it = mults.begin(); it != mults.end(); ++it)
      if (score(it->first) > score(best->first) || (score(it->first) == score(best->first) && it->first > best->first))
        best = it;
    WeightVector hw{best->first, sim};
    if (!dominant_for(comp, hw))
      throw InternalError("decompose_character: extremal weight " + to_string(hw) + " is not dominant");
    const long long coef = best->second;
    for (auto& [w, m] : weight_multiplicities(comp, hw)) {
      auto& slot = mults[w];
      slot -= coef * m;
      if (slot == 0) mults.erase(w);
    }
    out.emplace_back(std::move(hw), coef);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<WeightVector, long long>> branch(
    const BlockComposition& from, const WeightVector& mu, const BlockComposition& to) {
  if (from.n() != to.n()) throw InputError("branch: rank mismatch");
  for (int k : from.offsets())
    if (k > 0 && k < from.n() && !to.has_boundary(k))
      throw InputError("branch: " + to_string(to) + " does not refine " + to_string(from));
  if (from == to) return {{mu, 1}};
  return decompose_character(to, weight_multiplicities(from, mu), mu.sim);
}

Laurent character(const BlockComposition& comp, const WeightVector& mu, const TorusElement& x, CharacterMethod method) {
  require_dominant(comp, mu);
  if (x.size() != mu.size()) throw InputError("character: torus element has wrong length");
  validate(x);
  const auto off = comp.offsets();
  Laurent out = x.sim.pow(mu.sim);
  for (std::size_t b = 0; b + 1 < off.size(); ++b) {
    const auto block_mu = block_slice(mu.entries, off[b], off[b + 1]);
    const std::vector<Laurent> block_x(x.entries.begin() + off[b], x.entries.begin() + off[b + 1]);
    const bool numeric = std::all_of(block_x.begin(), block_x.end(), [](const Laurent& e) { return e.is_constant(); });
    if (method == CharacterMethod::JacobiTrudi || (method == CharacterMethod::Auto && !numeric)) {
      out *= jacobi_trudi_block(block_mu, block_x);
      continue;
    }
    if (!numeric) throw InputError("character: bialternant needs numeric coordinates");
    std::vector<Rational> xr;
    for (auto& e : block_x) xr.push_back(e.constant_value());
    Rational value;
    if (bialternant_block(block_mu, xr, value)) {
      out *= Laurent(value);
    } else if (method == CharacterMethod::Auto) {
      out *= jacobi_trudi_block(block_mu, block_x);
    } else {
      throw InputError("character: alternant denominator vanishes (repeated coordinates)");
    }
  }
  return out;
}

Laurent trace_virtual(const VirtualLeviModule& vm, const TorusElement& x, CharacterMethod method) {
  Laurent out;
  for (auto& t : vm.terms()) {
    Laurent c = character(vm.levi(), t.weight, x, method) * Laurent(t.mult);
    if (t.degree % 2) out -= c;
    else out += c;
  }
  return out;
}

}  // namespace wcx
