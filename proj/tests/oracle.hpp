#pragma once

// Test-only brute-force oracle.  Membership is computed by saturating
// pairwise sums until a fixed point, a different route than the library's
// generator-subtraction sieve, so the two can check each other.

#include <cstdint>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline std::vector<char> members(const std::vector<Int>& gens, Int limit) {
  std::vector<char> in(static_cast<std::size_t>(limit) + 1, 0);
  in[0] = 1;
  for (Int g : gens)
    if (g >= 1 && g <= limit) in[static_cast<std::size_t>(g)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Int a = 1; a <= limit; ++a) {
      if (!in[static_cast<std::size_t>(a)]) continue;
      for (Int b = a; a + b <= limit; ++b) {
        if (in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(a + b)]) {
          in[static_cast<std::size_t>(a + b)] = 1;
          changed = true;
        }
      }
    }
  }
  return in;
}

// Gaps in [1, limit]; the caller picks limit beyond the expected frobenius.
inline std::vector<Int> gaps(const std::vector<Int>& gens, Int limit) {
  const std::vector<char> in = members(gens, limit);
  std::vector<Int> out;
  for (Int x = 1; x <= limit; ++x)
    if (!in[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

inline Int frobenius(const std::vector<Int>& gens, Int limit) {
  const std::vector<Int> g = gaps(gens, limit);
  return g.empty() ? -1 : g.back();
}

}  // namespace oracle
