#include <numeric>
#include <random>

#include "doctest.h"
#include "gsi/semigroup.hpp"
#include "oracle.hpp"

using gsi::Int;
using gsi::NumericalSemigroup;

namespace {

NumericalSemigroup make(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(std::vector<Int>(gens));
}

}  // namespace

TEST_CASE("canonical form from generators") {
  NumericalSemigroup s = make({6, 14, 22, 23});
  CHECK(s.minimal_generators() == std::vector<Int>{6, 14, 22, 23});
  CHECK(s.frobenius() == 39);
  CHECK(s.frobenius() == oracle::frobenius({6, 14, 22, 23}, 100));
  CHECK(s.genus() == 21);
  CHECK(s.multiplicity() == 6);
  CHECK(s.embedding_dimension() == 4);
  CHECK(s.max_generator() == 23);

  NumericalSemigroup n = make({1});
  CHECK(n.is_naturals());
  CHECK(n.frobenius() == -1);
  CHECK(n.conductor() == 0);
  CHECK(n.genus() == 0);
  CHECK(n.minimal_generators() == std::vector<Int>{1});

  NumericalSemigroup r = make({4, 6, 2, 3});
  CHECK(r.minimal_generators() == std::vector<Int>{2, 3});
  CHECK(r.frobenius() == 1);
}

TEST_CASE("from_generators is canonical and idempotent") {
  NumericalSemigroup a = make({2, 3});
  CHECK(make({2, 3, 4, 5, 7}) == a);
  CHECK(make({3, 2, 2, 3}) == a);
  CHECK(NumericalSemigroup::from_generators(a.minimal_generators()) == a);

  // any generating set of <4,6,13> reduces to the same value
  NumericalSemigroup b = make({4, 6, 13});
  CHECK(make({4, 6, 13, 10, 17, 26}) == b);
}

TEST_CASE("from_generators rejects bad input") {
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), gsi::Error);
  CHECK_THROWS_AS(make({0, 3}), gsi::Error);
  CHECK_THROWS_AS(make({-2, 3}), gsi::Error);
  CHECK_THROWS_AS(make({4, 6}), gsi::Error);
  try {
    make({4, 6});
    FAIL("expected not_numerical");
  } catch (const gsi::Error& e) {
    CHECK(e.code() == gsi::Errc::not_numerical);
  }
  try {
    make({0});
    FAIL("expected empty_or_zero");
  } catch (const gsi::Error& e) {
    CHECK(e.code() == gsi::Errc::empty_or_zero);
  }
}

TEST_CASE("membership") {
  NumericalSemigroup s = make({2, 7});
  CHECK_FALSE(s.contains(5));
  CHECK(s.contains(0));
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(-4));
  CHECK(s.contains(6));
  CHECK(s.contains(1000));
  CHECK_FALSE(make({3, 4, 5}).contains(2));
}

TEST_CASE("gaps") {
  CHECK(make({2, 7}).gaps() == std::vector<Int>{1, 3, 5});
  CHECK(make({5, 6, 7, 8, 9}).gaps() == std::vector<Int>{1, 2, 3, 4});
  CHECK(make({1}).gaps().empty());

  NumericalSemigroup s = make({6, 14, 22, 23});
  const std::vector<Int> g = s.gaps();
  CHECK(static_cast<Int>(g.size()) == s.genus());
  CHECK(g.back() == s.frobenius());
  CHECK(g == oracle::gaps({6, 14, 22, 23}, 60));
}

TEST_CASE("sieve agrees with the saturation oracle on random inputs") {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<Int> pick(2, 40);
  int tested = 0;
  while (tested < 40) {
    std::vector<Int> gens;
    const int n = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) gens.push_back(pick(rng));
    Int d = 0;
    for (Int x : gens) d = std::gcd(d, x);
    if (d != 1) continue;
    ++tested;
    NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
    const Int limit = s.conductor() + 50;
    const std::vector<char> table = oracle::members(gens, limit);
    for (Int x = 0; x <= limit; ++x)
      REQUIRE(s.contains(x) == (table[static_cast<std::size_t>(x)] != 0));
  }
}

TEST_CASE("two-generator frobenius formula") {
  CHECK(gsi::frobenius_two_generators(2, 3) == 1);
  CHECK(gsi::frobenius_two_generators(3, 4) == 5);
  CHECK(gsi::frobenius_two_generators(2, 17) == 15);
  CHECK_THROWS_AS(gsi::frobenius_two_generators(4, 6), gsi::Error);
  CHECK_THROWS_AS(gsi::frobenius_two_generators(3, 3), gsi::Error);
  CHECK_THROWS_AS(gsi::frobenius_two_generators(1, 5), gsi::Error);

  for (Int a = 2; a <= 15; ++a) {
    for (Int b = a + 1; b <= 15; ++b) {
      if (std::gcd(a, b) != 1) continue;
      NumericalSemigroup s = make({a, b});
      CHECK(s.frobenius() == gsi::frobenius_two_generators(a, b));
      CHECK(s.genus() == (a - 1) * (b - 1) / 2);
    }
  }
}

TEST_CASE("apery sets") {
  CHECK(make({2, 3}).apery_set(2) == std::vector<Int>{0, 3});
  CHECK(make({2, 7}).apery_set(2) == std::vector<Int>{0, 7});
  CHECK(make({1}).apery_set(1) == std::vector<Int>{0});

  NumericalSemigroup s = make({2, 7});
  const std::vector<Int> ap = s.apery_set(2);
  CHECK(*std::max_element(ap.begin(), ap.end()) - 2 == s.frobenius());

  try {
    make({2, 7}).apery_set(3);
    FAIL("expected not_member");
  } catch (const gsi::Error& e) {
    CHECK(e.code() == gsi::Errc::not_member);
  }
  CHECK_THROWS_AS(make({2, 3}).apery_set(0), gsi::Error);
}

TEST_CASE("apery identities on sampled semigroups") {
  // frobenius = max(apery) - n and genus = sum(apery)/n - (n-1)/2
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> pick(2, 30);
  int tested = 0;
  while (tested < 60) {
    std::vector<Int> gens = {pick(rng), pick(rng), pick(rng)};
    Int d = 0;
    for (Int x : gens) d = std::gcd(d, x);
    if (d != 1) continue;
    NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
    if (s.frobenius() > 60) continue;
    ++tested;
    for (Int n = 1; n <= 12; ++n) {
      if (!s.contains(n)) continue;
      const std::vector<Int> ap = s.apery_set(n);
      Int max = 0, sum = 0;
      for (Int v : ap) {
        max = std::max(max, v);
        sum += v;
      }
      REQUIRE(s.frobenius() == max - n);
      REQUIRE(s.genus() == sum / n - (n - 1) / 2);
    }
  }
}

TEST_CASE("overflow is an error, never wraparound") {
  const Int big = Int{1} << 32;
  CHECK_THROWS_AS(gsi::frobenius_two_generators(big, big + 1), gsi::Error);
  try {
    gsi::frobenius_two_generators(big, big + 1);
  } catch (const gsi::Error& e) {
    CHECK(e.code() == gsi::Errc::overflow);
  }
  CHECK_THROWS_AS(gsi::checked_mul(Int{1} << 40, Int{1} << 40), gsi::Error);
  CHECK(gsi::checked_add(3, 4) == 7);
}

TEST_CASE("generator parsing and rendering") {
  CHECK(gsi::parse_generators("6,14,22,23") == std::vector<Int>{6, 14, 22, 23});
  CHECK(gsi::parse_generators("6 14  22,23") == std::vector<Int>{6, 14, 22, 23});
  CHECK(gsi::parse_generators("1") == std::vector<Int>{1});
  CHECK_THROWS_AS(gsi::parse_generators("2,x"), gsi::Error);
  CHECK_THROWS_AS(gsi::parse_generators("  "), gsi::Error);
  CHECK(make({2, 3}).to_string() == "⟨2,3⟩");
}

TEST_CASE("ordering is lexicographic on minimal generators") {
  CHECK(make({2, 3}) < make({2, 5}));
  CHECK(make({2, 5}) < make({3, 4}));
  CHECK_FALSE(make({3, 4}) < make({3, 4}));
}

TEST_CASE("membership table round trip") {
  NumericalSemigroup s = make({3, 5, 7});
  std::vector<char> table(static_cast<std::size_t>(s.frobenius()) + 1, 0);
  for (Int x = 0; x <= s.frobenius(); ++x)
    table[static_cast<std::size_t>(x)] = s.contains(x) ? 1 : 0;
  NumericalSemigroup t = NumericalSemigroup::from_membership_table(table, s.frobenius());
  CHECK(t == s);
  CHECK(t.genus() == s.genus());

  CHECK(NumericalSemigroup::from_membership_table({}, -1).is_naturals());
  CHECK_THROWS_AS(NumericalSemigroup::from_membership_table({1, 1}, 1), gsi::Error);
}
