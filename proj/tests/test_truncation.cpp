#include "catch2/catch_amalgamated.hpp"

#include <random>

#include "wcx/errors.hpp"
#include "wcx/kostant.hpp"
#include "wcx/truncation.hpp"

using namespace wcx;

namespace {

const GroupSignature kSig21(2, 1);

VirtualLeviModule flagship_cohomology() { return kostant_cohomology(kSig21, {1}, WeightVector{{0, 0, 0}, 0}); }

TruncationSpec at_least(int r, ExtInt b) {
  TruncationSpec s;
  s.at_least[r] = b;
  return s;
}

}  // namespace

TEST_CASE("central weights") {
  CHECK(central_weight(WeightVector{{0, 0, 0}, 0}) == 0);
  CHECK(central_weight(WeightVector{{1, 1, 1}, 0}) == 3);
  CHECK(central_weight(WeightVector{{0, 0, 0}, 1}) == 2);
  CHECK(central_weight(WeightVector{{2, 0, -1}, 1} + WeightVector{{1, 1, 0}, -3}) ==
        central_weight(WeightVector{{2, 0, -1}, 1}) + central_weight(WeightVector{{1, 1, 0}, -3}));
}

TEST_CASE("S_r weights") {
  CHECK(s_weight(kSig21, 1, WeightVector{{0, 0, 0}, 0}) == 0);
  CHECK(s_weight(kSig21, 1, WeightVector{{1, 0, 0}, 0}) == 2);
  CHECK(s_weight(kSig21, 1, WeightVector{{-1, 1, 0}, 0}) == -1);
  std::vector<int> census;
  const auto vm = flagship_cohomology();
  for (const auto& t : vm.terms()) census.push_back(s_weight(kSig21, 1, t.weight));
  CHECK(census == std::vector<int>{0, -1, -1, -3, -3, -4});
  const WeightVector a{{1, 2, -3, 4}, 2}, b{{0, -1, 5, 2}, -1};
  for (int r = 1; r <= 2; ++r) CHECK(s_weight(r, a + b) == s_weight(r, a) + s_weight(r, b));
  CHECK_THROWS_AS(s_weight(kSig21, 2, WeightVector{{0, 0, 0}, 0}), InputError);
}

TEST_CASE("flagship truncation") {
  const auto vm = flagship_cohomology();
  const auto kept = truncate(vm, at_least(1, -1));
  REQUIRE(kept.size() == 3);
  CHECK(kept.terms()[0].weight == WeightVector{{0, 0, 0}, 0});
  CHECK(kept.terms()[1].weight == WeightVector{{-1, 1, 0}, 0});
  CHECK(kept.terms()[2].weight == WeightVector{{0, -1, 1}, 0});
  CHECK(truncate(vm, at_least(1, -2)) == kept);
  CHECK(truncate(vm, at_least(1, ExtInt::neg_inf())) == vm);
  CHECK(truncate(vm, at_least(1, ExtInt::pos_inf())).empty());
}

TEST_CASE("split") {
  const auto vm = flagship_cohomology();
  auto [lo, hi] = split(vm, ExtInt::neg_inf(), 1);
  CHECK(lo.empty());
  CHECK(hi == vm);
  std::tie(lo, hi) = split(vm, ExtInt::pos_inf(), 1);
  CHECK(lo == vm);
  CHECK(hi.empty());
  std::tie(lo, hi) = split(vm, -1, 1);
  CHECK(lo.size() == 3);
  CHECK(hi.size() == 3);
}

TEST_CASE("truncation requires a central torus") {
  const auto vm = kostant_cohomology(GroupSignature(2, 2), {2}, WeightVector{{0, 0, 0, 0}, 0});
  CHECK_NOTHROW(truncate(vm, at_least(2, 0)));
  CHECK_THROWS_AS(truncate(vm, at_least(1, 0)), InputError);
  CHECK_THROWS_AS(TruncationSpec::restriction(1, 0, {{2, 0}}), InputError);
  CHECK(to_string(TruncationSpec::restriction(2, -3, {{1, -2}})) == "{>=-3@2, <-2@1}");
}

TEST_CASE("truncation is idempotent and monotone") {
  const auto vm = kostant_cohomology(GroupSignature(2, 2), {1, 2}, WeightVector{{1, 0, 0, -1}, 0});
  for (int a = -8; a <= 4; ++a)
    for (int b = -8; b <= 4; ++b) {
      TruncationSpec spec;
      spec.at_least[2] = a;
      spec.below[1] = b;
      const auto once = truncate(vm, spec);
      CHECK(truncate(once, spec) == once);
      TruncationSpec looser = spec;
      looser.at_least[2] = a - 1;
      looser.below[1] = b + 1;
      const auto wide = truncate(vm, looser);
      for (const auto& t : once.terms()) CHECK(std::find(wide.terms().begin(), wide.terms().end(), t) != wide.terms().end());
    }
}

TEST_CASE("inclusion-exclusion on random virtual modules") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), mult(-2, 2), degree(0, 3);
  const BlockComposition torus({1, 1, 1, 1});
  for (int trial = 0; trial < 200; ++trial) {
    VirtualLeviModule vm(torus);
    for (int k = 0; k < 12; ++k) vm.add(WeightVector{{entry(rng), entry(rng), entry(rng), entry(rng)}, 0}, degree(rng), mult(rng));
    std::map<int, ExtInt> bounds{{1, entry(rng)}, {2, entry(rng)}};
    CHECK(inclusion_exclusion_check(vm, bounds));
    CHECK(inclusion_exclusion_check(vm, {{1, bounds[1]}}));
    CHECK(inclusion_exclusion_check(vm, {}));
  }
}

TEST_CASE("thresholds reproduce the restriction bounds") {
  // t_r = d_r - a_r with d_r = (p-r)(q-r), shifted by -m on the sheaf side.
  for (const auto& sig : {GroupSignature(2, 1), GroupSignature(2, 2), GroupSignature(3, 2), GroupSignature(4, 3)})
    for (int m = -3; m <= 3; ++m) {
      const auto t = ic_profiles(sig).first;
      const auto a = a_thresholds(sig, t, m);
      for (int r = 1; r <= sig.q; ++r) {
        const int d = (sig.p - r) * (sig.q - r);
        CHECK(ExtInt(d) - a[r].value() == t[r] + m);
      }
      CHECK(a[0] == ExtInt(-m + sig.p * sig.q));
    }
}
