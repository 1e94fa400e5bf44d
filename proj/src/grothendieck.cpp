#include "wcx/grothendieck.hpp"

#include <set>
#include <sstream>

#include "wcx/characters.hpp"
#include "wcx/errors.hpp"
#include "wcx/kostant.hpp"

namespace wcx {

namespace {

Subset with_r(Subset s, int r) {
  s.push_back(r);
  return s;
}

std::string subset_body(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

void check_lambda(const GroupSignature& sig, const WeightVector& lambda) {
  if (static_cast<int>(lambda.size()) != sig.n())
    throw InputError("lambda has " + std::to_string(lambda.size()) + " entries, expected " + std::to_string(sig.n()));
  if (!dominant_for(BlockComposition({sig.n()}), lambda)) throw InputError("lambda " + to_string(lambda) + " is not dominant");
}

// S_s-weight of the radical root sum: the constant relating a weight to its
// Poincaré dual.
int dual_constant(const BlockComposition& levi, int s) { return s_weight(s, radical_root_sum(levi)); }

}  // namespace

std::vector<SplitPair> split_pairs(const VirtualLeviModule& vm, int r) {
  std::vector<SplitPair> out;
  for (const auto& t : vm.terms()) {
    const int n = static_cast<int>(t.weight.size());
    SplitPair sp;
    sp.hermitian.sim = t.weight.sim;
    for (int i = 0; i < n; ++i) {
      if (i >= r && i < n - r) sp.hermitian.entries.push_back(t.weight.entries[i]);
      else sp.linear.entries.push_back(t.weight.entries[i]);
    }
    out.push_back(std::move(sp));
  }
  return out;
}

std::string isotype_label(const SplitPair& sp) {
  std::string out;
  for (std::size_t i = 0; i < sp.linear.entries.size(); ++i) out += (i ? "," : "") + std::to_string(sp.linear.entries[i]);
  return out;
}

StratumClass restrict_weighted(const GroupSignature& sig, const WeightVector& lambda, const WeightProfile& prof, int r,
                               const RunConfig& cfg) {
  check_lambda(sig, lambda);
  validate_profile(sig, prof);
  if (r < 1 || r > sig.q) throw InputError("stratum r=" + std::to_string(r) + " outside 1.." + std::to_string(sig.q));

  StratumClass sc;
  sc.sig = sig;
  sc.r = r;
  sc.lambda = lambda;
  sc.profile = prof;
  sc.central = central_weight(lambda);
  const int m = sc.central;

  for (const Subset& s : all_subsets(r - 1)) {
    const Subset t = with_r(s, r);
    std::map<int, ExtInt> uppers;
    for (int x : s) uppers[x] = prof[x] + m;
    const auto spec = TruncationSpec::restriction(r, prof[r] + m, uppers);
    const auto module = truncate(kostant_cohomology(sig, t, lambda), spec);
    const auto pairs = split_pairs(module, r);
    for (const auto& token : cfg.coset_tokens(r, s)) {
      StratumTerm term;
      term.S = s;
      term.sign = s.size() % 2 ? -1 : 1;
      term.coset = token;
      term.module = module;
      term.split_pairs = pairs;
      term.truncation = spec;
      term.gamma_tag = "Gamma_{" + token.label + " g,{" + subset_body(t) + "}}";
      term.gamma_euler = cfg.euler_factor(t, "*");
      term.ind_tag = "Ind_{K_{" + token.label + " g,{" + subset_body(t) + "}}}^{K_{g,{" + std::to_string(r) + "}}}";
      sc.terms.push_back(std::move(term));
    }
  }
  return sc;
}

std::string to_string(ComparisonLevel level) {
  switch (level) {
    case ComparisonLevel::TermEqual: return "EQUAL";
    case ComparisonLevel::EvaluatedEqual: return "EQUAL_AFTER_EVALUATION";
    case ComparisonLevel::Different: return "DIFFERENT";
    case ComparisonLevel::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

ComparisonLevel parse_comparison_level(std::string_view text) {
  for (auto l : {ComparisonLevel::TermEqual, ComparisonLevel::EvaluatedEqual, ComparisonLevel::Different,
                 ComparisonLevel::Undetermined})
    if (to_string(l) == text) return l;
  throw InputError("unknown comparison level '" + std::string(text) + "'");
}

bool same_terms(const StratumClass& a, const StratumClass& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& x = a.terms[i];
    const auto& y = b.terms[i];
    if (x.S != y.S || x.sign != y.sign || !(x.coset == y.coset) || !(x.module == y.module)) return false;
  }
  return true;
}

IcComparison restrict_ic(const GroupSignature& sig, const WeightVector& lambda, int r, const RunConfig& cfg) {
  const auto [t, s] = ic_profiles(sig);
  IcComparison out;
  out.t_class = restrict_weighted(sig, lambda, t, r, cfg);
  out.s_class = restrict_weighted(sig, lambda, s, r, cfg);
  std::ostringstream rep;
  if (same_terms(out.t_class, out.s_class)) {
    out.level = ComparisonLevel::TermEqual;
    rep << "term lists identical (" << out.t_class.terms.size() << " terms)";
  } else {
    for (std::size_t i = 0; i < std::min(out.t_class.terms.size(), out.s_class.terms.size()); ++i) {
      const auto& x = out.t_class.terms[i];
      const auto& y = out.s_class.terms[i];
      if (!(x.module == y.module))
        rep << "S=" << to_string(x.S) << " token " << x.coset.label << ": " << x.module.size() << " vs "
            << y.module.size() << " constituents; ";
    }
    try {
      out.level = evaluate_class(out.t_class, cfg) == evaluate_class(out.s_class, cfg) ? ComparisonLevel::EvaluatedEqual
                                                                                      : ComparisonLevel::Different;
    } catch (const MissingSubstitution& e) {
      out.level = ComparisonLevel::Undetermined;
      rep << "evaluation impossible: " << e.what();
    }
  }
  out.report = rep.str();
  return out;
}

StratumClass duality_transform(const StratumClass& sc) {
  StratumClass out = sc;
  const int n = sc.sig.n();
  out.lambda = levi_dual(BlockComposition({n}), sc.lambda);
  out.profile = dual_profile(sc.sig, sc.profile);
  out.central = -sc.central;
  out.dualized = !sc.dualized;
  out.shift = out.dualized ? 2 * sc.sig.p * sc.sig.q : 0;
  out.twist = out.dualized ? sc.sig.p * sc.sig.q : 0;
  for (auto& term : out.terms) {
    term.module = poincare_dual(term.module);
    term.split_pairs = split_pairs(term.module, sc.r);
    // s(μ) ≥ b  ⟺  s(μ') < -b - c + 1, and symmetrically.
    const auto& levi = term.module.levi();
    TruncationSpec spec;
    for (auto [s, b] : term.truncation.at_least) spec.below[s] = -b - dual_constant(levi, s) + 1;
    for (auto [s, b] : term.truncation.below) spec.at_least[s] = -b - dual_constant(levi, s) + 1;
    term.truncation = spec;
  }
  return out;
}

BlockComposition common_refinement(const std::vector<BlockComposition>& comps) {
  if (comps.empty()) throw InputError("common_refinement of nothing");
  const int n = comps.front().n();
  std::set<int> cuts{0, n};
  for (const auto& c : comps) {
    if (c.n() != n) throw InputError("compositions of different rank");
    for (int o : c.offsets()) cuts.insert(o);
  }
  std::vector<int> blocks;
  for (auto it = std::next(cuts.begin()); it != cuts.end(); ++it) blocks.push_back(*it - *std::prev(it));
  return BlockComposition(blocks);
}

VirtualLeviModule evaluate_class(const StratumClass& sc, const RunConfig& cfg) {
  std::vector<BlockComposition> levis;
  for (const auto& t : sc.terms) levis.push_back(t.module.levi());
  if (levis.empty()) levis.push_back(standard_parabolic(sc.sig, {sc.r}).levi_comp);
  const auto target = common_refinement(levis);

  std::map<std::pair<int, WeightVector>, Rational> acc;
  for (const auto& term : sc.terms) {
    if (!term.coset.cardinality) {
      if (cfg.strict) throw MissingSubstitution("no cardinality for coset token " + term.coset.label + " of S=" + to_string(term.S));
    }
    const Rational card(term.coset.cardinality.value_or(1));
    const Subset t = with_r(term.S, sc.r);
    for (std::size_t i = 0; i < term.module.terms().size(); ++i) {
      const auto& lt = term.module.terms()[i];
      const auto label = isotype_label(term.split_pairs.at(i));
      auto euler = cfg.euler_factor(t, label);
      if (!euler) {
        if (cfg.strict)
          throw MissingSubstitution("no Euler factor for T=" + to_string(t) + " isotype '" + label + "'");
        euler = Rational(1);
      }
      const Rational scale = Rational(term.sign) * card * *euler * Rational(lt.mult);
      for (const auto& [w, k] : branch(term.module.levi(), lt.weight, target)) acc[{lt.degree, w}] += scale * Rational(k);
    }
  }
  VirtualLeviModule out(target);
  for (const auto& [key, v] : acc) {
    if (v == 0) continue;
    if (denominator(v) != 1)
      throw InputError("evaluated multiplicity " + to_string(v) + " of " + to_string(key.second) + " is not an integer");
    out.add(key.second, key.first, numerator(v).convert_to<long long>());
  }
  return out;
}

}  // namespace wcx
