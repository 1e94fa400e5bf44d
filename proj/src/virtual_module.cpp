#include "wcx/virtual_module.hpp"

#include <algorithm>

#include "wcx/errors.hpp"

namespace wcx {

namespace {

bool term_less(const LeviTerm& a, const LeviTerm& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.weight < b.weight;
}

}  // namespace

VirtualLeviModule::VirtualLeviModule(BlockComposition levi, std::vector<LeviTerm> terms)
    : levi_(std::move(levi)), terms_(std::move(terms)) {
  for (auto& t : terms_) {
    if (!dominant_for(levi_, t.weight))
      throw InputError("weight " + to_string(t.weight) + " is not dominant for Levi " + to_string(levi_));
    if (t.degree < 0) throw InputError("negative degree in virtual module");
  }
  canonicalize();
}

void VirtualLeviModule::add(const WeightVector& weight, int degree, long long mult) {
  if (!dominant_for(levi_, weight))
    throw InputError("weight " + to_string(weight) + " is not dominant for Levi " + to_string(levi_));
  LeviTerm t{weight, degree, mult};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, term_less);
  if (it != terms_.end() && it->degree == degree && it->weight == weight) {
    it->mult += mult;
    if (it->mult == 0) terms_.erase(it);
  } else if (mult != 0) {
    terms_.insert(it, std::move(t));
  }
}

void VirtualLeviModule::add(const VirtualLeviModule& other, long long scale) {
  if (other.levi_ != levi_) throw InputError("cannot add virtual modules over different Levis");
  for (auto& t : other.terms_) add(t.weight, t.degree, t.mult * scale);
}

void VirtualLeviModule::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_less);
  std::vector<LeviTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().degree == t.degree && merged.back().weight == t.weight)
      merged.back().mult += t.mult;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const LeviTerm& t) { return t.mult == 0; });
  terms_ = std::move(merged);
}

}  // namespace wcx
