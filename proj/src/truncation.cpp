#include "wcx/truncation.hpp"

#include <numeric>

#include "wcx/errors.hpp"

namespace wcx {

int central_weight(const WeightVector& lambda) {
  return std::accumulate(lambda.entries.begin(), lambda.entries.end(), 0) + 2 * lambda.sim;
}

int s_weight(int r, const WeightVector& mu) {
  const int n = static_cast<int>(mu.size());
  if (r < 1 || 2 * r > n) throw InputError("s_weight: stratum index " + std::to_string(r) + " out of range");
  int w = 2 * mu.sim;
  for (int i = 0; i < r; ++i) w += 2 * mu.entries[static_cast<std::size_t>(i)];
  for (int i = r; i < n - r; ++i) w += mu.entries[static_cast<std::size_t>(i)];
  return w;
}

int s_weight(const GroupSignature& sig, int r, const WeightVector& mu) {
  if (r < 1 || r > sig.q) throw InputError("s_weight: stratum index " + std::to_string(r) + " outside {1.." + std::to_string(sig.q) + "}");
  if (mu.size() != static_cast<std::size_t>(sig.n())) throw InputError("s_weight: weight length mismatch");
  return s_weight(r, mu);
}

TruncationSpec TruncationSpec::restriction(int r, ExtInt lower, std::map<int, ExtInt> uppers) {
  for (auto& [s, b] : uppers)
    if (s < 1 || s >= r) throw InputError("restriction truncation: upper index " + std::to_string(s) + " must lie in {1.." + std::to_string(r - 1) + "}");
  TruncationSpec spec;
  spec.at_least[r] = lower;
  spec.below = std::move(uppers);
  return spec;
}

std::string to_string(const TruncationSpec& spec) {
  std::string out = "{";
  bool first = true;
  for (auto& [r, b] : spec.at_least) {
    out += (first ? "" : ", ") + std::string(">=") + b.to_string() + "@" + std::to_string(r);
    first = false;
  }
  for (auto& [r, b] : spec.below) {
    out += (first ? "" : ", ") + std::string("<") + b.to_string() + "@" + std::to_string(r);
    first = false;
  }
  return out + "}";
}

void require_central(const BlockComposition& comp, int r) {
  const int n = comp.n();
  if (r < 1 || 2 * r > n) throw InputError("truncation index " + std::to_string(r) + " out of range for n = " + std::to_string(n));
  const bool ok = comp.has_boundary(r) && (n - r == r || comp.has_boundary(n - r));
  if (!ok) throw InputError("S_" + std::to_string(r) + " is not central in the Levi " + to_string(comp));
}

bool satisfies(const TruncationSpec& spec, const WeightVector& mu) {
  for (auto& [r, b] : spec.at_least)
    if (!(ExtInt(s_weight(r, mu)) >= b)) return false;
  for (auto& [r, b] : spec.below)
    if (!(ExtInt(s_weight(r, mu)) < b)) return false;
  return true;
}

VirtualLeviModule truncate(const VirtualLeviModule& vm, const TruncationSpec& spec) {
  for (auto& [r, b] : spec.at_least) require_central(vm.levi(), r);
  for (auto& [r, b] : spec.below) require_central(vm.levi(), r);
  VirtualLeviModule out(vm.levi());
  for (auto& t : vm.terms())
    if (satisfies(spec, t.weight)) out.add(t.weight, t.degree, t.mult);
  return out;
}

std::pair<VirtualLeviModule, VirtualLeviModule> split(const VirtualLeviModule& vm, ExtInt t, int r) {
  TruncationSpec lo, hi;
  lo.below[r] = t;
  hi.at_least[r] = t;
  return {truncate(vm, lo), truncate(vm, hi)};
}

bool inclusion_exclusion_check(const VirtualLeviModule& vm, const std::map<int, ExtInt>& bounds) {
  TruncationSpec all_ge;
  all_ge.at_least = bounds;
  const VirtualLeviModule lhs = truncate(vm, all_ge);

  std::vector<std::pair<int, ExtInt>> items(bounds.begin(), bounds.end());
  VirtualLeviModule rhs(vm.levi());
  for (unsigned mask = 0; mask < (1u << items.size()); ++mask) {
    TruncationSpec spec;
    int card = 0;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (1u << i)) {
        spec.below[items[i].first] = items[i].second;
        ++card;
      }
    rhs.add(truncate(vm, spec), card % 2 ? -1 : 1);
  }
  return lhs == rhs;
}

}  // namespace wcx
