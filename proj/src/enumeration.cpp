#include "gsi/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>
#include <thread>

namespace gsi {

namespace {

// Exhaustive walk over the semigroups with Frobenius number exactly k,
// realized as membership decisions for 1..k-1 taken in ascending order.
// State lives in two bitmasks over [0, k]:
//   members: decided members (bit 0 always set)
//   sums:    x such that x = a + b for decided members a, b >= 1
// x is forced in when sums has bit x, forced out when k - x is a member or
// 2x = k; a branch dies when a sum lands exactly on k.
class FrobeniusWalker {
public:
  FrobeniusWalker(Int k, const std::function<void(const NumericalSemigroup&)>& fn)
      : k_(k), fn_(fn) {}

  void run() {
    table_.assign(static_cast<std::size_t>(k_) + 1, 0);
    step(1, 1, 0);
  }

private:
  void emit(std::uint64_t members) {
    for (Int x = 0; x < k_; ++x)
      table_[static_cast<std::size_t>(x)] = static_cast<char>((members >> x) & 1);
    table_[static_cast<std::size_t>(k_)] = 0;
    fn_(NumericalSemigroup::from_membership_table(table_, k_));
  }

  void step(Int x, std::uint64_t members, std::uint64_t sums) {
    if (x == k_) {
      emit(members);
      return;
    }
    const bool forced_in = (sums >> x) & 1;
    const bool forced_out = ((members >> (k_ - x)) & 1) || 2 * x == k_;
    if (!(forced_in && forced_out)) {
      if (!forced_out) {
        // declare x a member; register the new pair sums that stay <= k
        const std::uint64_t low = (members & ~std::uint64_t{1}) | (std::uint64_t{1} << x);
        const std::uint64_t reach = low & ((std::uint64_t{2} << (k_ - x)) - 1);
        const std::uint64_t next_sums = sums | (reach << x);
        if (!((next_sums >> k_) & 1))
          step(x + 1, members | (std::uint64_t{1} << x), next_sums);
      }
      if (!forced_in) step(x + 1, members, sums);
    }
  }

  Int k_;
  const std::function<void(const NumericalSemigroup&)>& fn_;
  std::vector<char> table_;
};

}  // namespace

void for_each_semigroup_with_frobenius(
    Int k, const std::function<void(const NumericalSemigroup&)>& fn) {
  if (k == -1) {
    fn(NumericalSemigroup::naturals());
    return;
  }
  if (k == 0 || k < -1)
    raise(Errc::bad_frobenius, "no numerical semigroup has Frobenius number " + std::to_string(k));
  if (k > 62)
    raise(Errc::bad_input, "exhaustive enumeration is supported for Frobenius numbers <= 62");
  FrobeniusWalker(k, fn).run();
}

std::vector<NumericalSemigroup> semigroups_with_frobenius(Int k) {
  std::vector<NumericalSemigroup> out;
  for_each_semigroup_with_frobenius(k, [&](const NumericalSemigroup& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void catalog_entries_for_base(const NumericalSemigroup& base, Int f,
                              std::vector<CatalogEntry>& out) {
  const Int k = base.frobenius();
  const Int m_bound = base.max_generator();
  for (Int d = 2;; ++d) {
    if (k >= 1 && d * d * k > f) break;
    if (k == -1 && d * d - d - 1 > f) break;
    const Int gamma_lo = std::max(d * k, d * m_bound) + 1;
    const Int gamma_hi = (f - d * k) / (d - 1);
    for (Int gamma = gamma_lo; gamma <= gamma_hi; ++gamma) {
      if (std::gcd(d, gamma) != 1) continue;
      NumericalSemigroup glued = glue(base, d, gamma);
      CatalogEntry entry;
      entry.gens = glued.minimal_generators();
      entry.base_gens = base.minimal_generators();
      entry.d = d;
      entry.gamma = gamma;
      entry.frobenius = d * k + (d - 1) * gamma;
      assert(entry.frobenius == glued.frobenius());
      out.push_back(std::move(entry));
    }
  }
}

std::vector<CatalogEntry> catalog_entries_for_k(Int k, Int f) {
  std::vector<CatalogEntry> out;
  for_each_semigroup_with_frobenius(
      k, [&](const NumericalSemigroup& s) { catalog_entries_for_base(s, f, out); });
  return out;
}

}  // namespace

std::size_t GsiCatalog::total() const {
  std::size_t n = 0;
  for (const auto& [key, list] : entries) n += list.size();
  return n;
}

GsiCatalog enumerate_gsi_up_to(Int f, int jobs) {
  if (f < 1) raise(Errc::bad_input, "enumeration bound must be >= 1");

  std::vector<Int> ks{-1};
  for (Int k = 1; 4 * k <= f; ++k) ks.push_back(k);

  std::vector<std::vector<CatalogEntry>> slots(ks.size());
  if (jobs <= 1 || ks.size() <= 1) {
    for (std::size_t i = 0; i < ks.size(); ++i) slots[i] = catalog_entries_for_k(ks[i], f);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= ks.size()) break;
        slots[i] = catalog_entries_for_k(ks[i], f);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs), ks.size());
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  GsiCatalog catalog;
  catalog.bound = f;
  for (auto& slot : slots)
    for (auto& entry : slot) catalog.entries[entry.frobenius].push_back(std::move(entry));
  for (auto& [key, list] : catalog.entries)
    std::sort(list.begin(), list.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.gens < b.gens; });
  return catalog;
}

CatalogStats catalog_stats(const GsiCatalog& catalog) {
  CatalogStats stats;
  for (const auto& [key, list] : catalog.entries) {
    stats.per_frobenius[key] = list.size();
    stats.total += list.size();
    for (const auto& entry : list)
      ++stats.per_embedding_dimension[static_cast<Int>(entry.gens.size())];
  }
  return stats;
}

}  // namespace gsi
