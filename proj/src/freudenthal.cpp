#include "wcx/freudenthal.hpp"

#include <set>

#include "wcx/errors.hpp"

namespace wcx::oracle {

namespace {

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

std::vector<int> plus_rho(std::vector<int> v) {
  const int b = static_cast<int>(v.size());
  for (int i = 0; i < b; ++i) v[i] += b - 1 - i;
  return v;
}

}  // namespace

std::map<std::vector<int>, long long> freudenthal_gl(const std::vector<int>& lambda) {
  const int b = static_cast<int>(lambda.size());
  for (int i = 0; i + 1 < b; ++i)
    if (lambda[i] < lambda[i + 1]) throw InputError("freudenthal: weight is not dominant");
  std::map<std::vector<int>, long long> mult;
  if (b == 0) {
    mult[{}] = 1;
    return mult;
  }
  const auto lr = plus_rho(lambda);
  const long long top = dot(lr, lr);

  // Layers by depth below lambda; each layer only needs higher ones.
  std::set<std::vector<int>> layer{lambda};
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& mu : layer) {
      long long m = 1;
      if (mu != lambda) {
        long long num = 0;
        for (int i = 0; i < b; ++i)
          for (int j = i + 1; j < b; ++j) {
            for (int k = 1;; ++k) {
              auto nu = mu;
              nu[i] += k;
              nu[j] -= k;
              auto it = mult.find(nu);
              if (it == mult.end()) {
                // No weight has an entry above lambda[0].
                if (nu[i] > lambda[0]) break;
                continue;
              }
              num += 2 * (nu[i] - nu[j]) * it->second;
            }
          }
        const auto mr = plus_rho(mu);
        const long long den = top - dot(mr, mr);
        if (den == 0) {
          if (num != 0) throw InternalError("freudenthal: zero denominator");
          m = 0;
        } else {
          if (num % den != 0) throw InternalError("freudenthal: non-integral multiplicity");
          m = num / den;
        }
      }
      if (m == 0) continue;
      mult[mu] = m;
      for (int i = 0; i + 1 < b; ++i) {
        auto nu = mu;
        --nu[i];
        ++nu[i + 1];
        next.insert(nu);
      }
    }
    layer = std::move(next);
  }
  return mult;
}

std::map<std::vector<int>, long long> freudenthal_multiplicities(const BlockComposition& comp, const WeightVector& mu) {
  if (!dominant_for(comp, mu)) throw InputError("freudenthal: " + to_string(mu) + " not dominant");
  std::map<std::vector<int>, long long> acc{{{}, 1}};
  const auto off = comp.offsets();
  for (std::size_t k = 0; k < comp.block_count(); ++k) {
    std::vector<int> block(mu.entries.begin() + off[k], mu.entries.begin() + off[k + 1]);
    const auto local = freudenthal_gl(block);
    std::map<std::vector<int>, long long> next;
    for (const auto& [prefix, a] : acc)
      for (const auto& [tail, c] : local) {
        auto w = prefix;
        w.insert(w.end(), tail.begin(), tail.end());
        next[w] += a * c;
      }
    acc = std::move(next);
  }
  return acc;
}

Laurent character_by_enumeration(const BlockComposition& comp, const WeightVector& mu, const TorusElement& x) {
  validate(x);
  Laurent total;
  for (const auto& [w, m] : freudenthal_multiplicities(comp, mu)) {
    Laurent mono(m);
    for (std::size_t i = 0; i < w.size(); ++i) mono *= x.entries[i].pow(w[i]);
    total += mono;
  }
  return total * x.sim.pow(mu.sim);
}

}  // namespace wcx::oracle
