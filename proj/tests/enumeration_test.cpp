#include <map>
#include <set>

#include "doctest.h"
#include "gsi/classification.hpp"
#include "gsi/enumeration.hpp"
#include "gsi/render.hpp"

using gsi::Int;
using gsi::NumericalSemigroup;

namespace {

std::vector<std::vector<Int>> gens_of(const std::vector<NumericalSemigroup>& list) {
  std::vector<std::vector<Int>> out;
  for (const auto& s : list) out.push_back(s.minimal_generators());
  return out;
}

}  // namespace

TEST_CASE("semigroups with a fixed frobenius number") {
  CHECK(gsi::semigroups_with_frobenius(-1) ==
        std::vector<NumericalSemigroup>{NumericalSemigroup::naturals()});
  CHECK_THROWS_AS(gsi::semigroups_with_frobenius(0), gsi::Error);
  CHECK_THROWS_AS(gsi::semigroups_with_frobenius(-3), gsi::Error);
  CHECK_THROWS_AS(gsi::semigroups_with_frobenius(63), gsi::Error);

  CHECK(gens_of(gsi::semigroups_with_frobenius(2)) ==
        std::vector<std::vector<Int>>{{3, 4, 5}});
  CHECK(gens_of(gsi::semigroups_with_frobenius(4)) ==
        std::vector<std::vector<Int>>{{3, 5, 7}, {5, 6, 7, 8, 9}});
  CHECK(gens_of(gsi::semigroups_with_frobenius(6)) ==
        std::vector<std::vector<Int>>{
            {4, 5, 7}, {4, 7, 9, 10}, {5, 7, 8, 9, 11}, {7, 8, 9, 10, 11, 12, 13}});
  CHECK(gens_of(gsi::semigroups_with_frobenius(8)) ==
        std::vector<std::vector<Int>>{{3, 7, 11},
                                      {3, 10, 11},
                                      {5, 6, 7, 9},
                                      {5, 6, 9, 13},
                                      {5, 7, 9, 11, 13},
                                      {5, 9, 11, 12, 13},
                                      {6, 7, 9, 10, 11},
                                      {6, 9, 10, 11, 13, 14},
                                      {7, 9, 10, 11, 12, 13, 15},
                                      {9, 10, 11, 12, 13, 14, 15, 16, 17}});

  // population sizes for small frobenius numbers
  const std::vector<std::size_t> expected{1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40};
  for (Int k = 1; k <= 12; ++k) {
    const auto list = gsi::semigroups_with_frobenius(k);
    CHECK(list.size() == expected[static_cast<std::size_t>(k - 1)]);
    std::set<std::vector<Int>> distinct;
    for (const auto& s : list) {
      CHECK(s.frobenius() == k);
      distinct.insert(s.minimal_generators());
    }
    CHECK(distinct.size() == list.size());
    CHECK(std::is_sorted(list.begin(), list.end()));
  }
}

TEST_CASE("every positive frobenius number is realized") {
  for (Int k = 1; k <= 25; ++k) {
    std::vector<Int> maximal;
    for (Int x = k + 1; x <= 2 * k + 1; ++x) maximal.push_back(x);
    bool found = false;
    gsi::for_each_semigroup_with_frobenius(k, [&](const NumericalSemigroup& s) {
      found |= s.minimal_generators() == maximal;
      REQUIRE(s.embedding_dimension() <= s.multiplicity());
    });
    CHECK(found);  // {0} u [k+1, oo) always has frobenius k
  }
}

TEST_CASE("catalog up to 15") {
  gsi::GsiCatalog c = gsi::enumerate_gsi_up_to(15);
  const std::map<Int, std::vector<std::vector<Int>>> expected{
      {1, {{2, 3}}},
      {3, {{2, 5}}},
      {5, {{2, 7}, {3, 4}}},
      {7, {{2, 9}, {3, 5}}},
      {9, {{2, 11}, {4, 6, 7}}},
      {11, {{2, 13}, {3, 7}, {4, 5}, {4, 6, 9}}},
      {13, {{2, 15}, {3, 8}, {4, 6, 11}}},
      {15, {{2, 17}, {4, 6, 13}, {6, 8, 10, 11}}},
  };
  REQUIRE(c.entries.size() == expected.size());
  for (const auto& [key, gens_list] : expected) {
    REQUIRE(c.entries.count(key) == 1);
    const auto& got = c.entries.at(key);
    REQUIRE(got.size() == gens_list.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].gens == gens_list[i]);
  }
  CHECK(c.total() == 18);
  for (const auto& [key, list] : c.entries) CHECK(key % 2 == 1);
}

TEST_CASE("catalog for bound 1") {
  gsi::GsiCatalog c = gsi::enumerate_gsi_up_to(1);
  REQUIRE(c.total() == 1);
  CHECK(c.entries.at(1).front().gens == std::vector<Int>{2, 3});
  CHECK(c.entries.at(1).front().base_gens == std::vector<Int>{1});
  CHECK(c.entries.at(1).front().d == 2);
  CHECK(c.entries.at(1).front().gamma == 3);
}

TEST_CASE("catalog provenance") {
  gsi::GsiCatalog c = gsi::enumerate_gsi_up_to(20);
  for (const auto& [key, list] : c.entries) {
    for (const gsi::CatalogEntry& e : list) {
      gsi::GluingSpec spec = gsi::make_gluing_spec(
          NumericalSemigroup::from_generators(e.base_gens), e.d, e.gamma);
      REQUIRE(spec.is_gsi);
      REQUIRE(gsi::gsi_frobenius(spec) == key);
      REQUIRE(gsi::glue(spec).minimal_generators() == e.gens);
      REQUIRE(e.frobenius == key);

      // the canonical decomposition recovers the producing gluing
      auto [ok, recovered] = gsi::is_gsi(NumericalSemigroup::from_generators(e.gens));
      REQUIRE(ok);
      REQUIRE(recovered->base.minimal_generators() == e.base_gens);
      REQUIRE(recovered->d == e.d);
      REQUIRE(recovered->gamma == e.gamma);
    }
  }
}

TEST_CASE("catalog equals the exhaustive filter") {
  const Int bound = 14;
  std::set<std::vector<Int>> filtered;
  for (Int k = 1; k <= bound; ++k) {
    gsi::for_each_semigroup_with_frobenius(k, [&](const NumericalSemigroup& s) {
      if (gsi::is_gsi(s).first) filtered.insert(s.minimal_generators());
    });
  }
  std::set<std::vector<Int>> catalogued;
  for (const auto& [key, list] : gsi::enumerate_gsi_up_to(bound).entries)
    for (const auto& e : list) catalogued.insert(e.gens);
  CHECK(filtered == catalogued);
}

TEST_CASE("parallel enumeration is deterministic") {
  gsi::GsiCatalog a = gsi::enumerate_gsi_up_to(24, 1);
  gsi::GsiCatalog b = gsi::enumerate_gsi_up_to(24, 4);
  CHECK(gsi::render_catalog(a, gsi::Format::json) == gsi::render_catalog(b, gsi::Format::json));
  CHECK(gsi::render_catalog(a, gsi::Format::csv) == gsi::render_catalog(b, gsi::Format::csv));
}

TEST_CASE("catalog stats") {
  gsi::GsiCatalog c = gsi::enumerate_gsi_up_to(15);
  gsi::CatalogStats stats = gsi::catalog_stats(c);
  CHECK(stats.total == 18);
  CHECK(stats.per_frobenius.at(1) == 1);
  CHECK(stats.per_frobenius.at(11) == 4);
  CHECK(stats.per_frobenius.count(2) == 0);
  std::size_t by_dim = 0;
  for (const auto& [dim, count] : stats.per_embedding_dimension) by_dim += count;
  CHECK(by_dim == stats.total);
  CHECK(stats.per_embedding_dimension.at(2) == 13);
  CHECK(stats.per_embedding_dimension.at(3) == 4);
  CHECK(stats.per_embedding_dimension.at(4) == 1);

  gsi::CatalogStats tiny = gsi::catalog_stats(gsi::enumerate_gsi_up_to(1));
  CHECK(tiny.total == 1);
}
