#include "gsi/even_frobenius.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "gsi/enumeration.hpp"

namespace gsi {

namespace {

Int isqrt(Int x) {
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Semigroups with even Frobenius number 2..8, used as phase-1 seeds.
const std::vector<NumericalSemigroup>& small_seeds(Int t) {
  static const std::vector<std::vector<NumericalSemigroup>> banks = [] {
    std::vector<std::vector<NumericalSemigroup>> out;
    for (Int t = 2; t <= 8; t += 2) out.push_back(semigroups_with_frobenius(t));
    return out;
  }();
  return banks[static_cast<std::size_t>((t - 2) / 2)];
}

}  // namespace

NumericalSemigroup s_family(Int f) {
  if (f < 10 || f % 2 != 0)
    raise(Errc::bad_input, "the seed family is defined for even f >= 10, got " + std::to_string(f));
  const Int half = f / 2;
  std::vector<Int> gens;
  gens.push_back(half - 1);
  for (Int x = half + 2; x <= f - 3; ++x) gens.push_back(x);
  gens.push_back(f - 1);
  return NumericalSemigroup::from_generators(gens);
}

Int EvenBounds::d_max(Int t) const {
  if (t < 1) raise(Errc::bad_input, "seed Frobenius number must be >= 1");
  const Int disc = checked_add(checked_mul(checked_mul(4, f), t), 4 * t + 1);
  return (isqrt(disc) - 1) / (2 * t);
}

std::optional<Int> EvenBounds::gamma(Int t, Int d) const {
  if (d < 2) raise(Errc::bad_factor, "gluing factor d must be >= 2");
  const Int num = f - d * t;
  if (num <= 0 || num % (d - 1) != 0) return std::nullopt;
  return num / (d - 1);
}

EvenBounds even_bounds(Int f) {
  if (f < 2 || f % 2 != 0) raise(Errc::bad_input, "bounds are defined for even f >= 2");
  EvenBounds b;
  b.f = f;
  b.seed_frobenius_max = (f - 2) / 9;
  return b;
}

namespace {

// Both search phases share the loop shape: ascending seed Frobenius t, then
// ascending odd d, then the unique gamma = (f - d*t)/(d-1).
template <typename Visit>
void visit_even_witnesses(Int f, const Visit& visit) {
  if (f < 38) return;
  const EvenBounds bounds = even_bounds(f);
  const Int t_cap = bounds.seed_frobenius_max;

  for (Int t = 2; t <= std::min<Int>(8, t_cap); t += 2) {
    const Int dm = bounds.d_max(t);
    for (Int d = 3; d <= dm; d += 2) {
      const std::optional<Int> gamma = bounds.gamma(t, d);
      if (!gamma || *gamma <= d * t || std::gcd(d, *gamma) != 1) continue;
      for (const NumericalSemigroup& seed : small_seeds(t)) {
        if (*gamma <= d * seed.max_generator()) continue;
        if (visit(seed, d, *gamma)) return;
      }
    }
  }
  for (Int t = 10; t <= t_cap; t += 2) {
    const Int dm = bounds.d_max(t);
    for (Int d = 3; d <= dm; d += 2) {
      const std::optional<Int> gamma = bounds.gamma(t, d);
      // M(S_t) = t - 1, so the seed condition collapses to gamma > d*t.
      if (!gamma || *gamma <= d * t || std::gcd(d, *gamma) != 1) continue;
      if (visit(s_family(t), d, *gamma)) return;
    }
  }
}

}  // namespace

std::optional<GluingSpec> find_gsi_with_even_frobenius(Int f) {
  if (f % 2 != 0) raise(Errc::bad_input, "f must be even, got " + std::to_string(f));
  std::optional<GluingSpec> found;
  visit_even_witnesses(f, [&](const NumericalSemigroup& seed, Int d, Int gamma) {
    found = make_gluing_spec(seed, d, gamma);
    return true;
  });
  return found;
}

std::vector<GluingSpec> find_all_gsi_with_even_frobenius(Int f) {
  if (f % 2 != 0) raise(Errc::bad_input, "f must be even, got " + std::to_string(f));
  std::vector<GluingSpec> out;
  visit_even_witnesses(f, [&](const NumericalSemigroup& seed, Int d, Int gamma) {
    out.push_back(make_gluing_spec(seed, d, gamma));
    return false;
  });
  return out;
}

std::vector<EvenScanRecord> even_scan_records(Int bound, int jobs) {
  if (bound < 38) raise(Errc::bad_input, "scan bound must be >= 38");
  std::vector<Int> fs;
  for (Int f = 38; f <= bound; f += 2) fs.push_back(f);

  std::vector<EvenScanRecord> records(fs.size());
  auto fill = [&](std::size_t i) {
    records[i].f = fs[i];
    records[i].witness = find_gsi_with_even_frobenius(fs[i]);
    records[i].found = records[i].witness.has_value();
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < fs.size(); ++i) fill(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= fs.size()) break;
        fill(i);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs), fs.size());
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

std::vector<Int> realizable_even_scan(Int bound, int jobs) {
  std::vector<Int> out;
  for (const EvenScanRecord& r : even_scan_records(bound, jobs))
    if (r.found) out.push_back(r.f);
  return out;
}

std::vector<Int> evens_from_seed(const NumericalSemigroup& seed, Int d, Int bound) {
  if (d < 2) raise(Errc::bad_factor, "d must be >= 2");
  const Int t = seed.frobenius();
  std::vector<Int> out;
  Int gamma = std::max(checked_mul(d, t), checked_mul(d, seed.max_generator())) + 1;
  for (; checked_add(checked_mul(d, t), checked_mul(d - 1, gamma)) <= bound; ++gamma)
    if (std::gcd(d, gamma) == 1) out.push_back(d * t + (d - 1) * gamma);
  return out;
}

std::vector<Int> evens_reachable_from_frobenius(Int t, Int bound) {
  if (t < 1) raise(Errc::bad_input, "seed Frobenius number must be >= 1");
  if (bound < 1) raise(Errc::bad_input, "bound must be >= 1");
  std::vector<char> seen(static_cast<std::size_t>(bound) + 1, 0);
  for (const NumericalSemigroup& seed : semigroups_with_frobenius(t))
    for (Int d = 3; d * d * t + d - 1 <= bound; d += 2)
      for (Int f : evens_from_seed(seed, d, bound)) seen[static_cast<std::size_t>(f)] = 1;
  std::vector<Int> out;
  for (Int f = 0; f <= bound; ++f)
    if (seen[static_cast<std::size_t>(f)]) out.push_back(f);
  return out;
}

std::vector<Int> evens_with_gamma_floor(Int t, Int gamma_floor, Int bound) {
  if (t < 1) raise(Errc::bad_input, "seed Frobenius number must be >= 1");
  if (bound < 1) raise(Errc::bad_input, "bound must be >= 1");
  std::vector<char> seen(static_cast<std::size_t>(bound) + 1, 0);
  for (Int d = 3;; d += 2) {
    const Int floor = gamma_floor >= 0 ? gamma_floor : d * t;
    if (checked_add(checked_mul(d, t), checked_mul(d - 1, floor + 1)) > bound) break;
    for (Int gamma = floor + 1; d * t + (d - 1) * gamma <= bound; ++gamma)
      if (std::gcd(d, gamma) == 1) seen[static_cast<std::size_t>(d * t + (d - 1) * gamma)] = 1;
  }
  std::vector<Int> out;
  for (Int f = 0; f <= bound; ++f)
    if (seen[static_cast<std::size_t>(f)]) out.push_back(f);
  return out;
}

}  // namespace gsi
