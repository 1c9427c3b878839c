#pragma once

#include <vector>

#include "gsi/semigroup.hpp"

namespace gsi {

/// A gluing S (+)_{d,gamma} N of a numerical semigroup with the naturals:
/// the semigroup generated by d*(generators of S) and gamma.  The spec is a
/// GSI (generalized strongly increasing) gluing when d >= 2 and
/// gamma > max{d*F(S), d*M(S)}.
struct GluingSpec {
  NumericalSemigroup base;
  Int d = 0;
  Int gamma = 0;
  bool is_gsi = false;
};

/// Validates gcd(d,gamma)=1 (not_coprime), d >= 2 (bad_factor),
/// gamma >= 2 (bad_input) and fills in the is_gsi flag.
GluingSpec make_gluing_spec(NumericalSemigroup base, Int d, Int gamma);

/// true iff d >= 2 and gamma > max{d*F(base), d*M(base)}.
/// For base = N this reads gamma > d.
bool validate_gsi(const GluingSpec& spec);

/// The glued semigroup <d*gens(base), gamma> in canonical form.
NumericalSemigroup glue(const NumericalSemigroup& base, Int d, Int gamma);
NumericalSemigroup glue(const GluingSpec& spec);

/// The closed-form partition of the gaps of a GSI gluing, in four parts:
///   initial   the interval [1, d*v0 - 1]
///   middle    { x in (d*v0, gamma) : x not in d*S }
///   a_blocks  block k (1 <= k <= d-1) is d*gaps(S) + k*gamma; the family is
///             empty when S = N
///   b_blocks  block l (1 <= l <= d-2) is
///             { gamma + (l*gamma mod d) + k*d : 0 <= k <= floor(l*gamma/d)-1 };
///             the family is empty when d = 2
/// The parts are pairwise disjoint and their union is the gap set of the
/// glued semigroup.
struct GsiGapPartition {
  Int initial_lo = 1;
  Int initial_hi = 0;  // d*v0 - 1
  std::vector<Int> middle;
  std::vector<std::vector<Int>> a_blocks;
  std::vector<std::vector<Int>> b_blocks;

  Int initial_size() const noexcept { return initial_hi - initial_lo + 1; }
  Int total_size() const noexcept;
  /// All four parts merged into one sorted list.
  std::vector<Int> flatten() const;
};

/// Requires validate_gsi(spec); otherwise throws Errc::not_gsi naming the
/// violated inequality.
GsiGapPartition gsi_gaps(const GluingSpec& spec);

/// d*F(S) + (d-1)*gamma, the largest gap of the glued semigroup.
Int gsi_frobenius(const GluingSpec& spec);

/// Number of gaps of the glued semigroup, summed from the partition parts.
Int gsi_genus(const GluingSpec& spec);

}  // namespace gsi
