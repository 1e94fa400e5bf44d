#include "wcx/trace_skeleton.hpp"

#include "wcx/errors.hpp"
#include "wcx/kostant.hpp"

namespace wcx {

namespace {

std::string subset_body(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

}  // namespace

std::vector<TraceTerm> assemble_terms(const GroupSignature& sig, const WeightVector& lambda, const WeightProfile& prof,
                                      const std::map<int, TorusElement>& gamma0s, const RunConfig& cfg) {
  if (static_cast<int>(lambda.size()) != sig.n() || !dominant_for(BlockComposition({sig.n()}), lambda))
    throw InputError("lambda " + to_string(lambda) + " is not a dominant weight of GL_" + std::to_string(sig.n()));
  validate_profile(sig, prof);
  for (const auto& [s, x] : gamma0s) {
    if (s < 0 || s > sig.q) throw InputError("gamma0 given for s=" + std::to_string(s) + " outside 0.." + std::to_string(sig.q));
    if (static_cast<int>(x.size()) != sig.n())
      throw InputError("gamma0 for s=" + std::to_string(s) + " has " + std::to_string(x.size()) + " entries, expected " +
                       std::to_string(sig.n()));
    validate(x);
  }
  const int m = central_weight(lambda);

  std::vector<TraceTerm> out;
  for (const Subset& S : all_subsets(sig.q)) {
    TraceTerm term;
    term.S = S;
    term.s = S.empty() ? 0 : S.back();
    auto it = gamma0s.find(term.s);
    term.gamma0 = it != gamma0s.end() ? it->second : TorusElement::identity(sig.n());
    for (int s : S) term.truncation.at_least[s] = prof[s] + m;
    term.cohomology = kostant_cohomology(sig, S, lambda);
    term.computed_trace = trace_virtual(truncate(term.cohomology, term.truncation), term.gamma0);

    const auto body = subset_body(S);
    auto& ph = term.placeholders;
    ph.c_factor = "c(gamma0;gamma,delta)";
    ph.euler_chi = "chi(L'_{l,{" + body + "}})";
    ph.twisted_orbital = "TO_delta(phi^(" + std::to_string(term.s) + ")_j)";
    for (const auto& g : cfg.orbit_labels(S))
      ph.orbital_sum.push_back({g, "O_gamma(f_{" + g + "})", "vol(P_{" + body + "}," + g + ")^-1"});
    out.push_back(std::move(term));
  }
  return out;
}

std::vector<TraceSubTerm> inclusion_exclusion_expand(const TraceTerm& term) {
  if (term.S.empty()) throw InputError("inclusion-exclusion needs a nonempty S");
  std::vector<TraceSubTerm> out;
  for (const Subset& idx : all_subsets(static_cast<int>(term.S.size()))) {
    TraceSubTerm sub;
    for (int k : idx) {
      const int j = term.S[static_cast<std::size_t>(k - 1)];
      sub.J.push_back(j);
      sub.truncation.below[j] = term.truncation.at_least.at(j);
    }
    sub.sign = idx.size() % 2 ? -1 : 1;
    sub.computed_trace = trace_virtual(truncate(term.cohomology, sub.truncation), term.gamma0);
    out.push_back(std::move(sub));
  }
  return out;
}

Laurent signed_sum(const std::vector<TraceSubTerm>& subs) {
  Laurent total;
  for (const auto& s : subs) total += s.sign == 1 ? s.computed_trace : -s.computed_trace;
  return total;
}

}  // namespace wcx
