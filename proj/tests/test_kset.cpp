#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "corona/errors.hpp"
#include "corona/kset.hpp"
#include "helpers.hpp"

using namespace corona;
using namespace corona::testing;

namespace {

// Additive closure of the complement, checked on {1..3 k_p} by enumeration.
bool brute_force_algebra(const KSet& K) {
  const int kp = K.max().value_or(0);
  const int limit = 3 * kp;
  for (int a = 1; a <= limit; ++a)
    for (int b = 1; a + b <= limit; ++b)
      if (!K.contains(a) && !K.contains(b) && K.contains(a + b)) return false;
  return true;
}

KSet from_mask(unsigned mask, int bits) {
  std::vector<int> e;
  for (int j = 0; j < bits; ++j)
    if (mask & (1U << j)) e.push_back(j + 1);
  return KSet(e);
}

std::set<long> additive_closure(const std::vector<int>& gens, long limit) {
  std::vector<char> in(static_cast<std::size_t>(limit) + 1, 0);
  for (long x = 1; x <= limit; ++x)
    for (int g : gens)
      if (g == x || (g < x && in[static_cast<std::size_t>(x - g)])) in[static_cast<std::size_t>(x)] = 1;
  std::set<long> s;
  for (long x = 1; x <= limit; ++x)
    if (in[static_cast<std::size_t>(x)]) s.insert(x);
  return s;
}

}  // namespace

TEST_CASE("is_algebra_set examples") {
  const auto two = is_algebra_set(KSet({2}));
  CHECK_FALSE(two.is_algebra);
  REQUIRE(two.counterexample);
  CHECK(*two.counterexample == std::make_pair(1, 1));
  CHECK(is_algebra_set(KSet({1, 2, 5})).is_algebra);
  CHECK(is_algebra_set(KSet()).is_algebra);
  CHECK_THROWS_AS(KSet({0, 1}), InvalidKError);
}

TEST_CASE("is_algebra_set agrees with brute-force closure for every K in {1..12}") {
  int algebras = 0;
  for (unsigned mask = 1; mask < (1U << 12); ++mask) {
    const KSet K = from_mask(mask, 12);
    const auto v = is_algebra_set(K);
    CHECK(v.is_algebra == brute_force_algebra(K));
    if (v.is_algebra) {
      ++algebras;
    } else {
      REQUIRE(v.counterexample);
      const auto [j, k] = *v.counterexample;
      CHECK((!K.contains(j) && !K.contains(k) && K.contains(j + k)));
    }
  }
  CHECK(algebras > 0);
}

TEST_CASE("derived structure of algebra sets") {
  for (unsigned mask = 1; mask < (1U << 10); ++mask) {
    const KSet K = from_mask(mask, 10);
    if (!is_algebra_set(K).is_algebra) continue;
    // removing the largest element keeps an algebra
    CHECK(is_algebra_set(K.without_max()).is_algebra);
    // a nonempty algebra set contains 1
    CHECK(K.contains(1));
    // k0 in K, 1 < j < k0, j not in K  =>  k0 - j in K
    for (int k0 : K.elements())
      for (int j = 2; j < k0; ++j)
        if (!K.contains(j)) CHECK(K.contains(k0 - j));
    // z^k0 is in H_K iff k0 not in K
    for (int k0 = 1; k0 <= 11; ++k0) CHECK(is_hk_member(zpow(k0), K) == !K.contains(k0));
  }
}

TEST_CASE("k_minus") {
  CHECK(k_minus(KSet({1, 2, 5}), 3) == KSet({2}));
  CHECK_FALSE(is_algebra_set(k_minus(KSet({1, 2, 5}), 3)).is_algebra);
  CHECK(k_minus(KSet({1, 2, 5}), 6) == KSet());
  CHECK(k_minus(KSet({1, 2, 5}), 4) == KSet({1}));
  CHECK_THROWS_AS(k_minus(KSet({1, 2, 5}), 2), InvalidKError);
}

TEST_CASE("decompose examples") {
  const auto a = decompose({4, 6});
  CHECK(a.data.d == 2);
  CHECK(a.K1 == KSet({1}));
  CHECK(a.data.n_values == std::vector<int>{2, 3});
  CHECK(a.data.N0 == 4);
  CHECK(decompose({1}).data.d == 1);
  CHECK(decompose({1}).K1 == KSet());
  CHECK(decompose({2, 3}).data.d == 1);
  CHECK(decompose({2, 3}).K1 == KSet({1}));
  // <3,5> has gaps 1, 2, 4, 7
  CHECK(decompose({3, 5}).K1 == KSet({1, 2, 4, 7}));
  CHECK_THROWS_AS(decompose({}), InvalidKError);
}

TEST_CASE("decompose round-trip against the additive closure") {
  const std::vector<std::vector<int>> cases = {{4, 6}, {1}, {2, 3}, {3, 5}, {6, 10, 15}, {9, 12}, {5, 7, 9}, {2, 5},
                                               {8}, {10, 14, 21}};
  for (const auto& gens : cases) {
    const auto dec = decompose(gens);
    int g = 0;
    for (int x : dec.data.n_values) g = std::gcd(g, x);
    CHECK(g == 1);
    if (!dec.data.n_values.empty()) CHECK(dec.data.N0 > dec.data.n_values.back());
    const long limit = 4L * dec.data.N0 * dec.data.d;
    const auto closure = additive_closure(gens, limit);
    for (long x = 1; x <= limit; ++x) CHECK(dec.data.in_complement(x) == (closure.count(x) == 1));
    CHECK(is_algebra_set(dec.K1).is_algebra);
  }
}

TEST_CASE("reduce_to_finite") {
  const RFunc f = RFunc(q(1) + zpow(4).num() + zpow(6).num());
  CHECK(reduce_to_finite(f, 2) == RFunc(Poly{q(1), q(0), q(1), q(1)}));
  CHECK(reduce_to_finite(RFunc(Z), 1) == RFunc(Z));
  CHECK_THROWS_AS(reduce_to_finite(zpow(3), 2), NotReducibleError);
  const RFunc g = RFunc::make(Poly{q(1), q(0), q(3)}, Poly{q(1), q(0), q(-1, 4)});
  CHECK(expand_from_finite(reduce_to_finite(g, 2), 2) == g);
}

TEST_CASE("is_hk_member examples") {
  CHECK(is_hk_member(zpow(2) + zpow(4), KSet({1})));
  CHECK_FALSE(is_hk_member(RFunc(Z), KSet({1})));
  for (const auto& K : {KSet(), KSet({1}), KSet({1, 2, 5})}) CHECK(is_hk_member(RFunc(1), K));
  const auto dec = decompose({4, 6});
  CHECK(is_hk_member(RFunc(q(1)) + zpow(4) + zpow(10), dec));
  CHECK_FALSE(is_hk_member(zpow(2), dec));
  CHECK_FALSE(is_hk_member(zpow(5), dec));
}

TEST_CASE("H_K is closed under products for algebra sets in {1..8}") {
  std::mt19937_64 rng(41);
  for (unsigned mask = 1; mask < (1U << 8); mask += 3) {
    const KSet K = from_mask(mask, 8);
    if (!is_algebra_set(K).is_algebra) continue;
    auto member = [&] {
      std::vector<GRat> c;
      for (int j = 0; j <= 10; ++j) c.push_back(K.contains(j) ? GRat() : random_grat(rng));
      return RFunc(Poly(c));
    };
    const RFunc f = member(), g = member();
    REQUIRE(is_hk_member(f, K));
    REQUIRE(is_hk_member(g, K));
    CHECK(is_hk_member(f * g, K));
  }
}
