#include "catch2/catch_amalgamated.hpp"

#include "wcx/errors.hpp"
#include "wcx/unitary.hpp"

using namespace wcx;

namespace {
WeightProfile prof(std::initializer_list<long long> v) {
  WeightProfile p;
  for (auto x : v) p.t.emplace_back(x);
  return p;
}
}  // namespace

TEST_CASE("signatures") {
  CHECK(GroupSignature(2, 1).n() == 3);
  CHECK_THROWS_AS(GroupSignature(1, 2), InputError);
  CHECK_THROWS_AS(GroupSignature(2, 0), InputError);
}

TEST_CASE("standard parabolics") {
  auto a = standard_parabolic(GroupSignature(2, 1), {1});
  CHECK(a.levi_comp == BlockComposition({1, 1, 1}));
  CHECK(a.nilrad_roots.size() == 3);
  auto b = standard_parabolic(GroupSignature(2, 2), {2});
  CHECK(b.levi_comp == BlockComposition({2, 2}));
  CHECK(b.nilrad_roots.size() == 4);
  auto c = standard_parabolic(GroupSignature(3, 2), {1, 2});
  CHECK(c.levi_comp == BlockComposition({1, 1, 1, 1, 1}));
  CHECK(c.nilrad_roots.size() == 10);
  CHECK(standard_parabolic(GroupSignature(3, 2), {}).levi_comp == BlockComposition({5}));
  CHECK_THROWS_AS(standard_parabolic(GroupSignature(2, 1), {2}), InputError);
}

TEST_CASE("parabolic shape for all subsets") {
  for (int q = 1; q <= 4; ++q)
    for (int p = q; p <= q + 1; ++p) {
      const GroupSignature sig(p, q);
      for (const auto& S : all_subsets(q)) {
        const auto par = standard_parabolic(sig, S);
        const auto& bl = par.levi_comp.blocks();
        CHECK(std::equal(bl.begin(), bl.end(), bl.rbegin()));
        const int mid = sig.n() - 2 * (S.empty() ? 0 : S.back());
        if (mid > 0) CHECK(bl[bl.size() / 2] == mid);
        int sq = 0;
        for (int b : bl) sq += b * b;
        CHECK(static_cast<int>(par.nilrad_roots.size()) * 2 == sig.n() * sig.n() - sq);
        for (const auto& T : all_subsets(q)) {
          Subset u = S;
          u.insert(u.end(), T.begin(), T.end());
          std::sort(u.begin(), u.end());
          u.erase(std::unique(u.begin(), u.end()), u.end());
          CHECK(standard_parabolic(sig, u).nilrad_roots.size() >=
                std::max(par.nilrad_roots.size(), standard_parabolic(sig, T).nilrad_roots.size()));
        }
      }
    }
}

TEST_CASE("strata") {
  auto a = strata(GroupSignature(2, 1));
  REQUIRE(a.size() == 1);
  CHECK(a[0].dim == 0);
  CHECK(a[0].group_desc == "GU(1)");
  auto b = strata(GroupSignature(2, 2));
  REQUIRE(b.size() == 2);
  CHECK(b[0].dim == 1);
  CHECK(b[0].group_desc == "GU(1,1)");
  CHECK(b[1].dim == 0);
  CHECK(b[1].group_desc == "GU(1)");
  auto c = strata(GroupSignature(3, 1));
  REQUIRE(c.size() == 1);
  CHECK(c[0].dim == 0);
  CHECK(c[0].group_desc == "GU(2)");
}

TEST_CASE("intersection-complex profiles and duality") {
  CHECK(ic_profiles(GroupSignature(2, 1)) == std::pair{prof({-1}), prof({-2})});
  CHECK(ic_profiles(GroupSignature(2, 2)) == std::pair{prof({-2, -3}), prof({-3, -4})});
  CHECK(ic_profiles(GroupSignature(3, 2)) == std::pair{prof({-3, -5}), prof({-4, -6})});
  CHECK(dual_profile(GroupSignature(2, 1), prof({-1})) == prof({-2}));
  CHECK(dual_profile(GroupSignature(2, 2), prof({-2, -3})) == prof({-3, -4}));
  const WeightProfile inf{{ExtInt::pos_inf(), ExtInt::pos_inf()}};
  CHECK(dual_profile(GroupSignature(3, 2), inf) == WeightProfile{{ExtInt::neg_inf(), ExtInt::neg_inf()}});
  for (int q = 1; q <= 4; ++q)
    for (int p = q; p <= 5; ++p) {
      const GroupSignature sig(p, q);
      const auto [t, s] = ic_profiles(sig);
      CHECK(dual_profile(sig, t) == s);
      for (int a = -9; a <= 3; ++a) {
        WeightProfile x{std::vector<ExtInt>(q, ExtInt(a))};
        CHECK(dual_profile(sig, dual_profile(sig, x)) == x);
      }
    }
  CHECK_THROWS_AS(dual_profile(GroupSignature(2, 2), prof({1})), InputError);
}

TEST_CASE("sheaf-side thresholds") {
  CHECK(a_thresholds(GroupSignature(2, 1), prof({-1}), 0) == std::vector<ExtInt>{2, 1});
  CHECK(a_thresholds(GroupSignature(2, 2), prof({-2, -3}), 0) == std::vector<ExtInt>{4, 3, 3});
  CHECK(a_thresholds(GroupSignature(2, 1), prof({-1}), 3) == std::vector<ExtInt>{-1, -2});
}

TEST_CASE("chain terms") {
  auto one = chain_terms(1);
  REQUIRE(one.size() == 2);
  CHECK((one[0].chain.empty() && one[0].sign == 1));
  CHECK((one[1].chain == Subset{1} && one[1].sign == -1));
  auto two = chain_terms(2);
  REQUIRE(two.size() == 4);
  CHECK(two[1].chain == Subset{1});
  CHECK(two[2].chain == Subset{2});
  CHECK((two[3].chain == Subset{1, 2} && two[3].sign == 1));
  for (int q = 1; q <= 5; ++q) {
    int sum = 0;
    for (auto& c : chain_terms(q)) sum += c.sign;
    CHECK(chain_terms(q).size() == (1u << q));
    CHECK(sum == 0);
  }
}

TEST_CASE("profiles and subsets as text") {
  CHECK(parse_profile("-2,inf") == WeightProfile{{ExtInt(-2), ExtInt::pos_inf()}});
  CHECK(to_string(parse_profile("-inf,3")) == "-inf,3");
  CHECK_THROWS_AS(parse_profile("1,,2"), InputError);
  CHECK(parse_subset("2,1,2") == Subset{1, 2});
  CHECK(parse_subset("{1}") == Subset{1});
  CHECK(parse_subset("").empty());
  CHECK(to_string(Subset{1, 2}) == "{1,2}");
  CHECK_THROWS_AS(validate_profile(GroupSignature(2, 2), prof({1})), InputError);
}
