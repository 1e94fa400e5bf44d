#include "wcx/kostant.hpp"

#include "wcx/characters.hpp"
#include "wcx/errors.hpp"

namespace wcx {

VirtualLeviModule kostant_cohomology(const BlockComposition& levi, const WeightVector& lambda) {
  if (lambda.size() != static_cast<std::size_t>(levi.n())) throw InputError("kostant: weight length mismatch");
  if (!dominant_for(BlockComposition({levi.n()}), lambda))
    throw InputError("kostant: weight " + to_string(lambda) + " is not dominant");
  VirtualLeviModule out(levi);
  for (const auto& w : minimal_coset_reps(levi)) out.add(dot_action(w, lambda), w.length(), 1);
  return out;
}

VirtualLeviModule kostant_cohomology(const GroupSignature& sig, const Subset& subset, const WeightVector& lambda) {
  if (lambda.size() != static_cast<std::size_t>(sig.n())) throw InputError("kostant: weight length mismatch");
  return kostant_cohomology(standard_parabolic(sig, subset).levi_comp, lambda);
}

VirtualLeviModule chevalley_eilenberg_oracle(const GroupSignature& sig, const Subset& subset, const WeightVector& lambda,
                                             OracleLimits limits) {
  return chevalley_eilenberg(sig, subset, lambda, limits).cohomology;
}

OracleReport chevalley_eilenberg(const GroupSignature& sig, const Subset& subset, const WeightVector& lambda,
                                 OracleLimits limits) {
  if (lambda.size() != static_cast<std::size_t>(sig.n())) throw InputError("oracle: weight length mismatch");
  return chevalley_eilenberg(standard_parabolic(sig, subset).levi_comp, lambda, limits);
}

long long euler_dim(const VirtualLeviModule& vm) {
  long long total = 0;
  for (auto& t : vm.terms()) {
    const long long d = weyl_dim(vm.levi(), t.weight) * t.mult;
    total += (t.degree % 2) ? -d : d;
  }
  return total;
}

VirtualLeviModule poincare_dual(const VirtualLeviModule& vm) {
  const auto& levi = vm.levi();
  const int top = levi.radical_dim();
  const WeightVector roots = radical_root_sum(levi);
  VirtualLeviModule out(levi);
  for (auto& t : vm.terms()) out.add(levi_dual(levi, t.weight) - roots, top - t.degree, t.mult);
  return out;
}

}  // namespace wcx
