#include "wcx/unitary.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "wcx/errors.hpp"

namespace wcx {

GroupSignature::GroupSignature(int p_, int q_) : p(p_), q(q_) {
  if (q < 1 || p < q)
    throw InputError("signature requires p >= q >= 1, got (" + std::to_string(p) + "," + std::to_string(q) + ")");
}

std::string to_string(const GroupSignature& sig) {
  return "GU(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
}

std::string to_string(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

Subset parse_subset(std::string_view text) {
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  Subset out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (!piece.empty()) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
      if (ec != std::errc() || ptr != piece.data() + piece.size())
        throw InputError("bad subset element '" + std::string(piece) + "'");
      out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Subset> all_subsets(int q) {
  std::vector<Subset> out;
  for (unsigned mask = 0; mask < (1u << q); ++mask) {
    Subset s;
    for (int i = 0; i < q; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

ParabolicData standard_parabolic(const GroupSignature& sig, const Subset& subset) {
  for (int s : subset)
    if (s < 1 || s > sig.q) throw InputError("subset element " + std::to_string(s) + " outside {1.." + std::to_string(sig.q) + "}");
  if (!std::is_sorted(subset.begin(), subset.end()) ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw InputError("subset must be sorted and duplicate-free");

  const int n = sig.n();
  ParabolicData out;
  out.subset = subset;
  out.rmax = subset.empty() ? 0 : subset.back();
  if (subset.empty()) {
    out.levi_comp = BlockComposition({n});
  } else {
    std::vector<int> outer;
    int prev = 0;
    for (int s : subset) {
      outer.push_back(s - prev);
      prev = s;
    }
    std::vector<int> blocks = outer;
    if (n - 2 * out.rmax > 0) blocks.push_back(n - 2 * out.rmax);
    blocks.insert(blocks.end(), outer.rbegin(), outer.rend());
    out.levi_comp = BlockComposition(std::move(blocks));
  }
  out.nilrad_roots = out.levi_comp.radical_roots();
  return out;
}

std::vector<StratumInfo> strata(const GroupSignature& sig) {
  std::vector<StratumInfo> out;
  for (int r = 1; r <= sig.q; ++r) {
    StratumInfo info;
    info.r = r;
    info.dim = (sig.p - r) * (sig.q - r);
    // Definite at r = q; GU(0,0) degenerates to the similitude factor.
    if (r < sig.q) info.group_desc = to_string(GroupSignature{sig.p - r, sig.q - r});
    else info.group_desc = "GU(" + std::to_string(sig.p > sig.q ? sig.p - sig.q : 1) + ")";
    out.push_back(std::move(info));
  }
  return out;
}

std::string to_string(const WeightProfile& prof) {
  std::string out;
  for (std::size_t i = 0; i < prof.size(); ++i) out += (i ? "," : "") + prof.t[i].to_string();
  return out;
}

WeightProfile parse_profile(std::string_view text) {
  WeightProfile prof;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    prof.t.push_back(ExtInt::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return prof;
}

void validate_profile(const GroupSignature& sig, const WeightProfile& prof) {
  if (prof.size() != static_cast<std::size_t>(sig.q))
    throw InputError("profile has " + std::to_string(prof.size()) + " entries, expected q = " + std::to_string(sig.q));
}

std::pair<WeightProfile, WeightProfile> ic_profiles(const GroupSignature& sig) {
  WeightProfile t, s;
  for (int r = 1; r <= sig.q; ++r) {
    t.t.emplace_back(r * (r - sig.n()) + 1);
    s.t.emplace_back(r * (r - sig.n()));
  }
  return {t, s};
}

WeightProfile dual_profile(const GroupSignature& sig, const WeightProfile& prof) {
  validate_profile(sig, prof);
  WeightProfile out;
  for (int r = 1; r <= sig.q; ++r) out.t.push_back(-prof[r] + (1 + 2 * r * (r - sig.n())));
  return out;
}

std::vector<ExtInt> a_thresholds(const GroupSignature& sig, const WeightProfile& prof, int m) {
  validate_profile(sig, prof);
  std::vector<ExtInt> a{ExtInt(-m + sig.p * sig.q)};
  for (int r = 1; r <= sig.q; ++r) a.push_back(-prof[r] + (-m + (sig.p - r) * (sig.q - r)));
  return a;
}

std::vector<ChainTerm> chain_terms(int q) {
  if (q < 1) throw InputError("chain_terms: q must be positive");
  std::vector<ChainTerm> out;
  for (auto& s : all_subsets(q)) {
    const int sign = (s.size() % 2 == 0) ? 1 : -1;
    out.push_back({std::move(s), sign});
  }
  return out;
}

}  // namespace wcx
