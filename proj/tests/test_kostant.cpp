#include "catch2/catch_amalgamated.hpp"

#include "oracles.hpp"
#include "wcx/errors.hpp"
#include "wcx/kostant.hpp"

using namespace wcx;

namespace {

const WeightVector kTriv3{{0, 0, 0}, 0};

VirtualLeviModule module(std::vector<int> blocks, std::vector<LeviTerm> terms) {
  return VirtualLeviModule(BlockComposition(std::move(blocks)), std::move(terms));
}

}  // namespace

TEST_CASE("radical cohomology of the trivial representation of GU(2,1)") {
  const auto expected = module({1, 1, 1}, {{{{0, 0, 0}, 0}, 0, 1},
                                           {{{-1, 1, 0}, 0}, 1, 1},
                                           {{{0, -1, 1}, 0}, 1, 1},
                                           {{{-2, 1, 1}, 0}, 2, 1},
                                           {{{-1, -1, 2}, 0}, 2, 1},
                                           {{{-2, 0, 2}, 0}, 3, 1}});
  CHECK(kostant_cohomology(GroupSignature(2, 1), {1}, kTriv3) == expected);
  CHECK(chevalley_eilenberg_oracle(GroupSignature(2, 1), {1}, kTriv3) == expected);
}

TEST_CASE("empty subset keeps the representation in degree 0") {
  const WeightVector lam{{2, 0, -1}, 1};
  CHECK(kostant_cohomology(GroupSignature(2, 1), {}, lam) == module({3}, {{lam, 0, 1}}));
  CHECK(chevalley_eilenberg_oracle(GroupSignature(2, 1), {}, lam) == module({3}, {{lam, 0, 1}}));
}

TEST_CASE("GU(2,2), S={2}: degree census of the (2,2) parabolic") {
  const auto vm = kostant_cohomology(GroupSignature(2, 2), {2}, WeightVector{{0, 0, 0, 0}, 0});
  REQUIRE(vm.size() == 6);
  std::vector<int> census(5, 0);
  for (const auto& t : vm.terms()) ++census.at(t.degree);
  CHECK(census == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(chevalley_eilenberg_oracle(GroupSignature(2, 2), {2}, WeightVector{{0, 0, 0, 0}, 0}) == vm);
}

TEST_CASE("GU(1,1) standard representation: the 2x2 complex") {
  const WeightVector lam{{1, 0}, 0};
  const auto rep = chevalley_eilenberg(GroupSignature(1, 1), {1}, lam);
  CHECK(rep.module_dim == 2);
  CHECK(rep.cochain_dims == std::vector<long long>{2, 2});
  CHECK(rep.cohomology_dims == std::vector<long long>{1, 1});
  // H^0 = invariants of the upper root: e_1 with weight (1,0); H^1 = coinvariants twisted by -(1,-1).
  CHECK(rep.cohomology == module({1, 1}, {{{{1, 0}, 0}, 0, 1}, {{{-1, 2}, 0}, 1, 1}}));
  CHECK(kostant_cohomology(GroupSignature(1, 1), {1}, lam) == rep.cohomology);
}

TEST_CASE("one-dimensional representations: cochains are exterior powers") {
  const WeightVector det{{1, 1, 1, 1}, -1};
  const auto rep = chevalley_eilenberg(GroupSignature(2, 2), {1, 2}, det);
  CHECK(rep.module_dim == 1);
  CHECK(rep.cochain_dims == std::vector<long long>{1, 6, 15, 20, 15, 6, 1});
  CHECK(rep.cohomology.size() == 24);
}

TEST_CASE("Kostant terms are dot actions of brute-force minimal representatives") {
  for (const auto& sig : {GroupSignature(2, 1), GroupSignature(2, 2), GroupSignature(3, 2)})
    for (const auto& S : all_subsets(sig.q)) {
      const auto levi = standard_parabolic(sig, S).levi_comp;
      const WeightVector lam{[&] {
                               std::vector<int> v(sig.n(), 0);
                               v.front() = 2;
                               v.back() = -1;
                               return v;
                             }(),
                             1};
      VirtualLeviModule expected(levi);
      for (const auto& w : testing::brute_min_coset_reps(levi.blocks()))
        expected.add(testing::brute_dot(w, lam), testing::inversions(w), 1);
      CHECK(kostant_cohomology(sig, S, lam) == expected);
    }
}

TEST_CASE("Kostant agrees with the Chevalley-Eilenberg complex on a grid") {
  for (const auto& sig : {GroupSignature(1, 1), GroupSignature(2, 1), GroupSignature(3, 1)})
    for (const auto& v : testing::decreasing_vectors(sig.n(), -1, 1))
      for (const auto& S : all_subsets(sig.q)) {
        const WeightVector lam{v, 0};
        INFO(to_string(sig) << " S=" << to_string(S) << " lambda=" << to_string(lam));
        CHECK(kostant_cohomology(sig, S, lam) == chevalley_eilenberg_oracle(sig, S, lam));
      }
}

TEST_CASE("Euler characteristics") {
  CHECK(euler_dim(kostant_cohomology(GroupSignature(2, 1), {1}, kTriv3)) == 0);
  CHECK(euler_dim(kostant_cohomology(GroupSignature(2, 1), {}, WeightVector{{2, 1, 0}, 0})) == 8);
  CHECK(euler_dim(kostant_cohomology(GroupSignature(2, 2), {1}, WeightVector{{1, 0, 0, 0}, 0})) == 0);
}

TEST_CASE("degree 0 is lambda, top degree is the longest representative") {
  for (const auto& S : all_subsets(2)) {
    const GroupSignature sig(3, 2);
    const WeightVector lam{{3, 1, 1, 0, -2}, 0};
    const auto vm = kostant_cohomology(sig, S, lam);
    const auto levi = vm.levi();
    CHECK(vm.terms().front().degree == 0);
    CHECK(vm.terms().front().weight == lam);
    CHECK(vm.terms().back().degree == levi.radical_dim());
  }
}

TEST_CASE("Poincare duality matches the dual representation") {
  for (const auto& sig : {GroupSignature(1, 1), GroupSignature(2, 1), GroupSignature(3, 1), GroupSignature(2, 2)})
    for (const auto& v : testing::decreasing_vectors(sig.n(), -2, 2))
      for (const auto& S : all_subsets(sig.q)) {
        const WeightVector lam{v, 1};
        const auto dual_lam = levi_dual(BlockComposition({sig.n()}), lam);
        const auto vm = kostant_cohomology(sig, S, lam);
        CHECK(poincare_dual(vm) == kostant_cohomology(sig, S, dual_lam));
        CHECK(poincare_dual(poincare_dual(vm)) == vm);
      }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(kostant_cohomology(GroupSignature(2, 1), {1}, WeightVector{{0, 1, 0}, 0}), InputError);
  CHECK_THROWS_AS(kostant_cohomology(GroupSignature(2, 1), {1}, WeightVector{{0, 0}, 0}), InputError);
  OracleLimits tight;
  tight.max_module_dim = 5;
  CHECK_THROWS_AS(chevalley_eilenberg(GroupSignature(2, 1), {1}, WeightVector{{2, 0, 0}, 0}, tight), SizeBoundError);
  CHECK_THROWS_AS(chevalley_eilenberg(GroupSignature(3, 2), {1}, WeightVector{{0, 0, 0, 0, 0}, 0}), SizeBoundError);
}

TEST_CASE("virtual modules stay canonical") {
  VirtualLeviModule vm(BlockComposition({1, 2}));
  vm.add(WeightVector{{0, 1, 0}, 0}, 1, 2);
  vm.add(WeightVector{{3, 0, 0}, 0}, 0, 1);
  vm.add(WeightVector{{0, 1, 0}, 0}, 1, -2);
  REQUIRE(vm.size() == 1);
  CHECK(vm.terms()[0].degree == 0);
  CHECK_THROWS_AS(vm.add(WeightVector{{0, 0, 1}, 0}, 0, 1), InputError);
  CHECK_THROWS_AS(vm.add(VirtualLeviModule(BlockComposition({3}))), InputError);
}
