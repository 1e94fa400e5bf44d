#include "catch2/catch_amalgamated.hpp"

#include <random>

#include "wcx/errors.hpp"
#include "wcx/kostant.hpp"
#include "wcx/trace_skeleton.hpp"

using namespace wcx;

namespace {
const GroupSignature kSig21(2, 1), kSig22(2, 2);
const WeightVector kTriv3{{0, 0, 0}, 0}, kTriv4{{0, 0, 0, 0}, 0};
}  // namespace

TEST_CASE("flagship trace terms") {
  const auto terms = assemble_terms(kSig21, kTriv3, ic_profiles(kSig21).first, {});
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].S.empty());
  CHECK(terms[0].s == 0);
  CHECK(terms[0].truncation.empty());
  CHECK(terms[0].computed_trace == Laurent(1));
  CHECK(terms[1].S == Subset{1});
  CHECK(terms[1].s == 1);
  CHECK(terms[1].computed_trace == Laurent(-1));
  CHECK(terms[1].placeholders.euler_chi == "chi(L'_{l,{1}})");
  CHECK(terms[1].placeholders.twisted_orbital == "TO_delta(phi^(1)_j)");
  REQUIRE(terms[1].placeholders.orbital_sum.size() == 1);
  CHECK(terms[1].placeholders.orbital_sum[0].token == "g0");
}

TEST_CASE("symbolic torus element") {
  const auto x = TorusElement::generic(3);
  const auto terms = assemble_terms(kSig21, kTriv3, ic_profiles(kSig21).first, {{1, x}});
  CHECK(terms[1].computed_trace.to_string() == "1 - t1^-1*t2 - t2^-1*t3");
  CHECK(terms[0].computed_trace == Laurent(1));  // identity for s=0
}

TEST_CASE("GU(2,2) has four terms; +inf keeps nothing") {
  const auto terms = assemble_terms(kSig22, kTriv4, ic_profiles(kSig22).first, {});
  REQUIRE(terms.size() == 4);
  CHECK(terms[1].S == Subset{1});
  CHECK(terms[2].S == Subset{2});
  CHECK(terms[3].S == Subset{1, 2});
  const WeightProfile inf{{ExtInt::pos_inf(), ExtInt::pos_inf()}};
  for (const auto& t : assemble_terms(kSig22, WeightVector{{2, 1, 0, 0}, 1}, inf, {}))
    if (!t.S.empty()) CHECK(t.computed_trace.is_zero());
}

TEST_CASE("inclusion-exclusion sub-terms") {
  const auto terms = assemble_terms(kSig22, kTriv4, ic_profiles(kSig22).first, {{2, TorusElement::generic(4)}});
  const auto subs = inclusion_exclusion_expand(terms[3]);
  REQUIRE(subs.size() == 4);
  CHECK(subs[0].J.empty());
  CHECK(subs[3].J == Subset{1, 2});
  CHECK(subs[3].sign == 1);
  CHECK(signed_sum(subs) == terms[3].computed_trace);
  CHECK(inclusion_exclusion_expand(terms[1]).size() == 2);
  CHECK_THROWS_AS(inclusion_exclusion_expand(terms[0]), InputError);

  const WeightProfile floor{{ExtInt::neg_inf()}};
  const auto open = assemble_terms(kSig21, kTriv3, floor, {});
  const auto parts = inclusion_exclusion_expand(open[1]);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].computed_trace == open[1].computed_trace);
  CHECK(parts[1].computed_trace.is_zero());
}

TEST_CASE("signed sums hold on random profiles") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> bound(-8, 2), entry(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const GroupSignature sig = trial % 2 ? GroupSignature(3, 2) : GroupSignature(2, 2);
    std::vector<int> v(sig.n(), 0);
    v[0] = entry(rng) + 1;
    v[1] = std::min(v[0], entry(rng));
    WeightProfile prof;
    for (int r = 1; r <= sig.q; ++r) prof.t.emplace_back(bound(rng));
    std::map<int, TorusElement> g;
    for (int s = 0; s <= sig.q; ++s) g[s] = TorusElement::generic(sig.n());
    for (const auto& term : assemble_terms(sig, WeightVector{v, 0}, prof, g)) {
      if (term.S.empty()) continue;
      CHECK(signed_sum(inclusion_exclusion_expand(term)) == term.computed_trace);
    }
  }
}

TEST_CASE("identity traces are signed dimensions") {
  const WeightVector lam{{2, 1, 0, -1}, 0};
  const auto prof = ic_profiles(kSig22).first;
  for (const auto& term : assemble_terms(kSig22, lam, prof, {})) {
    CHECK(term.computed_trace == Laurent(euler_dim(truncate(term.cohomology, term.truncation))));
    if (term.S.empty()) CHECK(term.computed_trace == Laurent(weyl_dim(BlockComposition({4}), lam)));
  }
}

TEST_CASE("orbit tokens come from the configuration") {
  RunConfig cfg;
  cfg.orbit_tokens[{{1}, "g1"}] = 1;
  cfg.orbit_tokens[{{1}, "g2"}] = 1;
  const auto terms = assemble_terms(kSig21, kTriv3, ic_profiles(kSig21).first, {}, cfg);
  REQUIRE(terms[1].placeholders.orbital_sum.size() == 2);
  CHECK(terms[1].placeholders.orbital_sum[1].orbital == "O_gamma(f_{g2})");
  CHECK(terms[0].placeholders.orbital_sum[0].token == "g0");
}

TEST_CASE("trace errors") {
  CHECK_THROWS_AS(assemble_terms(kSig21, WeightVector{{0, 1, 0}, 0}, ic_profiles(kSig21).first, {}), InputError);
  CHECK_THROWS_AS(assemble_terms(kSig21, kTriv3, ic_profiles(kSig21).first, {{1, TorusElement::generic(2)}}), InputError);
  TorusElement bad = TorusElement::generic(3);
  bad.entries[0] = Laurent::variable("a") + Laurent::variable("b");
  CHECK_THROWS_AS(assemble_terms(kSig21, kTriv3, ic_profiles(kSig21).first, {{0, bad}}), InputError);
}
