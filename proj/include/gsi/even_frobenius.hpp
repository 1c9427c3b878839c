#pragma once

#include <optional>
#include <vector>

#include "gsi/gluing.hpp"
#include "gsi/semigroup.hpp"

namespace gsi {

/// The seed family S_f for even f >= 10: the semigroup minimally generated
/// by {f/2-1} u [f/2+2, f-3] u {f-1}.  Its Frobenius number is f and its
/// largest generator is f-1.  Throws Errc::bad_input for odd f or f < 10.
NumericalSemigroup s_family(Int f);

/// Search-interval endpoints for writing an even f as d*t + (d-1)*gamma with
/// t = F(S) even and d odd:
///   seed_frobenius_max = floor((f-2)/9)
///   d_max(t)           = floor((-1 + sqrt(4*f*t + 4*t + 1)) / (2*t))
///   gamma(t,d)         = (f - d*t)/(d-1) when that quotient is integral
struct EvenBounds {
  Int f = 0;
  Int seed_frobenius_max = 0;
  Int d_max(Int t) const;
  std::optional<Int> gamma(Int t, Int d) const;
};

EvenBounds even_bounds(Int f);

/// Decides whether an even f is the Frobenius number of some GSI gluing and
/// returns the first witness in deterministic order (ascending seed
/// Frobenius t, then ascending odd d, then the unique gamma).  Phase 1 tries
/// every semigroup with even F(S) <= min(8, floor((f-2)/9)); phase 2 tries
/// the S_t family for even t in [10, floor((f-2)/9)].  Always empty for
/// f < 38.  Throws Errc::bad_input for odd f.
std::optional<GluingSpec> find_gsi_with_even_frobenius(Int f);

/// Every witness the two-phase search can produce for f, in search order.
std::vector<GluingSpec> find_all_gsi_with_even_frobenius(Int f);

/// Every even f <= bound realizable as a GSI Frobenius number
/// (bound >= 38; throws Errc::bad_input below that).
std::vector<Int> realizable_even_scan(Int bound, int jobs = 1);

struct EvenScanRecord {
  Int f = 0;
  bool found = false;
  std::optional<GluingSpec> witness;
};

/// One record per even f in [38, bound], in ascending order; identical
/// output for any jobs count.
std::vector<EvenScanRecord> even_scan_records(Int bound, int jobs = 1);

/// Frobenius numbers d*F(S) + (d-1)*gamma <= bound reachable from one seed
/// and one fixed d, over gamma > max{d*F(S), d*M(S)} coprime to d.
std::vector<Int> evens_from_seed(const NumericalSemigroup& seed, Int d, Int bound);

/// Union of evens_from_seed over every semigroup with F(S) = t and every
/// odd d >= 3.
std::vector<Int> evens_reachable_from_frobenius(Int t, Int bound);

/// Frobenius numbers d*t + (d-1)*gamma <= bound over odd d >= 3 and
/// gamma > gamma_floor coprime to d, with a floor that does not scale with
/// d; gamma_floor < 0 means the default floor d*t.
std::vector<Int> evens_with_gamma_floor(Int t, Int gamma_floor, Int bound);

}  // namespace gsi
