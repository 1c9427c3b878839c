#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "gsi/gluing.hpp"
#include "gsi/semigroup.hpp"

namespace gsi {

/// Visits every numerical semigroup with Frobenius number exactly k, in an
/// unspecified order.  k = -1 visits only the naturals.  Supported for
/// k <= 62 (the exhaustive search is a depth-first walk over membership
/// decisions on [1, k-1]).  Throws Errc::bad_frobenius for k = 0 or k < -1.
void for_each_semigroup_with_frobenius(
    Int k, const std::function<void(const NumericalSemigroup&)>& fn);

/// Same set, as a list sorted lexicographically by minimal generators.
std::vector<NumericalSemigroup> semigroups_with_frobenius(Int k);

struct CatalogEntry {
  std::vector<Int> gens;       // minimal generators of the glued semigroup
  std::vector<Int> base_gens;  // minimal generators of the base
  Int d = 0;
  Int gamma = 0;
  Int frobenius = 0;
};

/// All GSI semigroups with Frobenius number <= bound, keyed by Frobenius
/// number; each entry carries the gluing that produced it.  Keys with no
/// GSI semigroup are absent.
struct GsiCatalog {
  Int bound = 0;
  std::map<Int, std::vector<CatalogEntry>> entries;
  std::size_t total() const;
};

/// Exhaustive catalog: for every k in {-1} u [1, f] and every semigroup S
/// with F(S) = k, emits S (+)_{d,gamma} N over all d >= 2 with d^2*k <= f
/// (for k = -1: d^2 - d - 1 <= f) and all gamma coprime to d with
/// gamma > max{d*F(S), d*M(S)} and d*k + (d-1)*gamma <= f.  Entries per key
/// are sorted by generators; output is identical for any jobs count.
GsiCatalog enumerate_gsi_up_to(Int f, int jobs = 1);

struct CatalogStats {
  std::size_t total = 0;
  std::map<Int, std::size_t> per_frobenius;
  std::map<Int, std::size_t> per_embedding_dimension;
};

CatalogStats catalog_stats(const GsiCatalog& catalog);

}  // namespace gsi
