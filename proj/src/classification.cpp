#include "gsi/classification.hpp"

#include <algorithm>
#include <numeric>

namespace gsi {

namespace {

// target in <gens>?  Plain boolean DP; gens need not have gcd 1.
bool submonoid_contains(const std::vector<Int>& gens, Int target) {
  if (target == 0) return true;
  if (target < 0) return false;
  std::vector<char> hit(static_cast<std::size_t>(target) + 1, 0);
  hit[0] = 1;
  for (Int x = 1; x <= target; ++x) {
    for (Int g : gens) {
      if (g > x) continue;
      if (hit[static_cast<std::size_t>(x - g)]) {
        hit[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return hit[static_cast<std::size_t>(target)] != 0;
}

Int gcd_of(const std::vector<Int>& v, std::size_t first, std::size_t last) {
  Int d = 0;
  for (std::size_t i = first; i < last; ++i) d = std::gcd(d, v[i]);
  return d;
}

}  // namespace

CharacteristicSequenceReport analyze_characteristic_sequence(const std::vector<Int>& seq) {
  CharacteristicSequenceReport r;
  r.sequence = seq;
  if (seq.empty()) return r;

  const std::size_t h = seq.size() - 1;
  r.e.resize(seq.size());
  r.e[0] = seq[0];
  for (std::size_t k = 1; k <= h; ++k) r.e[k] = std::gcd(r.e[k - 1], seq[k]);

  r.cs1_ok = r.e[h] == 1;
  for (std::size_t k = 1; k <= h && r.cs1_ok; ++k)
    if (r.e[k] >= r.e[k - 1]) r.cs1_ok = false;

  r.n.resize(h);
  for (std::size_t k = 1; k <= h; ++k) r.n[k - 1] = r.e[k - 1] / r.e[k];

  r.cs2_ok = true;
  for (std::size_t k = 1; k + 1 <= h && r.cs2_ok; ++k)
    if (checked_mul(r.e[k - 1], seq[k]) >= checked_mul(r.e[k], seq[k + 1])) r.cs2_ok = false;

  if (r.cs1_ok && r.cs2_ok) {
    Int c = 1 - seq[0];
    for (std::size_t k = 1; k <= h; ++k)
      c = checked_add(c, checked_mul(r.n[k - 1] - 1, seq[k]));
    r.conductor_formula = c;
  }
  return r;
}

std::pair<bool, CharacteristicSequenceReport> is_strongly_increasing(const NumericalSemigroup& s) {
  CharacteristicSequenceReport r = analyze_characteristic_sequence(s.minimal_generators());
  return {r.cs1_ok && r.cs2_ok, std::move(r)};
}

std::vector<Int> reorder_characteristic(const std::vector<Int>& seq) {
  if (seq.size() < 3)
    raise(Errc::not_characteristic, "need h >= 2 (at least three entries)");
  if (seq[1] >= seq[0])
    raise(Errc::not_characteristic, "need v_1 < v_0");
  CharacteristicSequenceReport r = analyze_characteristic_sequence(seq);
  if (!r.cs1_ok || !r.cs2_ok)
    raise(Errc::not_characteristic, "input is not a characteristic sequence");

  std::vector<Int> out;
  out.reserve(seq.size());
  out.push_back(seq[1]);
  if (seq[0] % seq[1] != 0) out.push_back(seq[0]);
  out.insert(out.end(), seq.begin() + 2, seq.end());
  return out;
}

std::pair<bool, std::optional<GluingSpec>> is_gsi(const NumericalSemigroup& s) {
  const std::vector<Int>& g = s.minimal_generators();
  if (g.size() < 2) return {false, std::nullopt};

  const Int gamma = g.back();
  const Int d = gcd_of(g, 0, g.size() - 1);
  if (d < 2) return {false, std::nullopt};

  std::vector<Int> scaled(g.begin(), g.end() - 1);
  for (Int& x : scaled) x /= d;
  GluingSpec spec = make_gluing_spec(NumericalSemigroup::from_generators(scaled), d, gamma);
  if (!spec.is_gsi) return {false, std::nullopt};
  return {true, std::move(spec)};
}

bool is_si_by_gluing(const NumericalSemigroup& s) {
  const std::vector<Int>& g = s.minimal_generators();
  // <1> is generated by the characteristic sequence (1); any coprime pair is
  // a characteristic sequence as well.
  if (g.size() <= 2) return true;

  const Int d = gcd_of(g, 0, g.size() - 1);
  if (d < 2) return false;
  std::vector<Int> scaled(g.begin(), g.end() - 1);
  for (Int& x : scaled) x /= d;
  NumericalSemigroup base = NumericalSemigroup::from_generators(scaled);
  if (base.embedding_dimension() != s.embedding_dimension() - 1) return false;
  if (!is_si_by_gluing(base)) return false;

  const std::vector<Int>& v = base.minimal_generators();
  const Int prefix = gcd_of(v, 0, v.size() - 1);
  return g.back() > checked_mul(checked_mul(d, prefix), v.back());
}

bool is_telescopic(const NumericalSemigroup& s) {
  const std::vector<Int>& v = s.minimal_generators();
  if (v.size() == 1) return true;  // the naturals

  Int e_prev = v[0];
  for (std::size_t k = 1; k < v.size(); ++k) {
    const Int e_k = std::gcd(e_prev, v[k]);
    // n_k = 1 would put the minimal generator v_k inside <v_0..v_{k-1}>.
    if (e_k == e_prev) return false;
    if (k >= 2) {
      // n_k * v_k in <v_0..v_{k-1}>  <=>  v_k/e_k in <prefix/e_prev>
      std::vector<Int> prefix(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
      for (Int& x : prefix) x /= e_prev;
      if (!submonoid_contains(prefix, v[k] / e_k)) return false;
    }
    e_prev = e_k;
  }
  return e_prev == 1;
}

namespace {

bool free_arrangement_search(const std::vector<Int>& gens, std::vector<char>& used,
                             std::vector<Int>& prefix, Int e_prev) {
  const std::size_t h = gens.size() - 1;
  if (prefix.size() == gens.size()) return e_prev == 1;

  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (used[i]) continue;
    const Int v = gens[i];
    if (prefix.empty()) {
      // the leading element carries the whole gcd chain: e_0 >= 2^h
      if (v < (Int{1} << h)) continue;
      used[i] = 1;
      prefix.push_back(v);
      if (free_arrangement_search(gens, used, prefix, v)) return true;
      prefix.pop_back();
      used[i] = 0;
      continue;
    }
    const Int e_k = std::gcd(e_prev, v);
    if (e_k == e_prev) continue;                            // n_k = 1
    if (e_k == 1 && prefix.size() != gens.size() - 1) continue;  // chain exhausted early
    bool ok = true;
    if (prefix.size() >= 2) {
      std::vector<Int> scaled(prefix);
      for (Int& x : scaled) x /= e_prev;
      ok = submonoid_contains(scaled, v / e_k);
    }
    if (!ok) continue;
    used[i] = 1;
    prefix.push_back(v);
    if (free_arrangement_search(gens, used, prefix, e_k)) return true;
    prefix.pop_back();
    used[i] = 0;
  }
  return false;
}

}  // namespace

bool is_free(const NumericalSemigroup& s) {
  const std::vector<Int>& v = s.minimal_generators();
  if (v.size() <= 2) return true;
  const std::size_t h = v.size() - 1;
  // Some arrangement must open with a generator whose divisor chain can
  // strictly descend h times.
  if (h >= 63 || v.back() < (Int{1} << h)) return false;

  std::vector<char> used(v.size(), 0);
  std::vector<Int> prefix;
  prefix.reserve(v.size());
  return free_arrangement_search(v, used, prefix, 0);
}

bool is_complete_intersection(const NumericalSemigroup& s) {
  const std::vector<Int>& g = s.minimal_generators();
  if (s.is_naturals()) return true;
  if (g.size() == 1) return false;  // cannot happen for canonical values
  // Gluings of symmetric semigroups are symmetric, so a complete
  // intersection always has genus = conductor/2.
  if (2 * s.genus() != s.conductor()) return false;

  const std::size_t n = g.size();
  // Unordered bipartitions: keep generator 0 on the A side.
  const std::uint64_t splits = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < splits; ++mask) {
    std::vector<Int> a, b;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || (mask >> (i - 1)) & 1)
        a.push_back(g[i]);
      else
        b.push_back(g[i]);
    }
    if (b.empty()) continue;
    const Int d1 = gcd_of(a, 0, a.size());
    const Int d2 = gcd_of(b, 0, b.size());
    if (std::gcd(d1, d2) != 1) continue;
    for (Int& x : a) x /= d1;
    for (Int& x : b) x /= d2;
    NumericalSemigroup sa = NumericalSemigroup::from_generators(a);
    NumericalSemigroup sb = NumericalSemigroup::from_generators(b);
    if (!sb.contains(d1) || !sa.contains(d2)) continue;
    if (is_complete_intersection(sa) && is_complete_intersection(sb)) return true;
  }
  return false;
}

ClassificationReport classify(const NumericalSemigroup& s) {
  ClassificationReport r;
  auto [si, si_report] = is_strongly_increasing(s);
  r.si = si;
  r.si_witness = std::move(si_report);
  auto [gsi, gsi_spec] = is_gsi(s);
  r.gsi = gsi;
  r.gsi_witness = std::move(gsi_spec);
  r.telescopic = is_telescopic(s);
  r.free = is_free(s);
  r.complete_intersection = is_complete_intersection(s);
  return r;
}

}  // namespace gsi
