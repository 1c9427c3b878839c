#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gsi/gluing.hpp"
#include "gsi/semigroup.hpp"

namespace gsi {

/// Witness data for the strongly-increasing test of a generator sequence
/// (v_0,...,v_h):
///   e[k] = gcd(v_0,...,v_k)
///   n[k-1] = e[k-1]/e[k]            (k = 1..h)
///   cs1_ok: e strictly decreases and e[h] = 1
///   cs2_ok: e[k-1]*v_k < e[k]*v_{k+1} for 1 <= k <= h-1 (vacuous for h <= 1)
/// When both hold the sequence is a characteristic sequence and
/// conductor_formula = sum (n_i - 1) v_i - v_0 + 1 equals the conductor of
/// the generated semigroup.
struct CharacteristicSequenceReport {
  std::vector<Int> sequence;
  std::vector<Int> e;
  std::vector<Int> n;
  bool cs1_ok = false;
  bool cs2_ok = false;
  Int conductor_formula = 0;
};

CharacteristicSequenceReport analyze_characteristic_sequence(const std::vector<Int>& seq);

/// Tests whether the ascending minimal generators form a characteristic
/// sequence (the sequence may always be taken ascending).
std::pair<bool, CharacteristicSequenceReport> is_strongly_increasing(const NumericalSemigroup& s);

/// Rewrites a characteristic sequence with v_1 < v_0 (h >= 2) into one that
/// starts with v_1 and generates the same semigroup: (v_1,v_0,v_2,...) when
/// v_1 does not divide v_0, else (v_1,v_2,...).  Throws
/// Errc::not_characteristic when the precondition fails.
std::vector<Int> reorder_characteristic(const std::vector<Int>& seq);

/// Canonical GSI test: with minimal generators g_1 < ... < g_{h+1}, take
/// gamma = g_{h+1} and d = gcd(g_1,...,g_h); the semigroup is GSI iff d >= 2
/// and gamma > max{d*F(S'), d*M(S')} for S' = <g_1/d,...,g_h/d>.  Returns the
/// decomposition on success.  Semigroups with fewer than two minimal
/// generators are not GSI.
std::pair<bool, std::optional<GluingSpec>> is_gsi(const NumericalSemigroup& s);

/// Recursive strongly-increasing test via the gluing construction: true for
/// embedding dimension <= 2, and otherwise iff S = S' (+)_{d,gamma} N with S'
/// strongly increasing and gamma > d * gcd(v_0,...,v_{h-2}) * v_{h-1}.
/// Agrees with is_strongly_increasing on every input.
bool is_si_by_gluing(const NumericalSemigroup& s);

/// Free for the ascending arrangement of the minimal generators.
bool is_telescopic(const NumericalSemigroup& s);

/// Free for some arrangement: there is an ordering (v_0,...,v_h) of the
/// minimal generators with n_k * v_k in <v_0,...,v_{k-1}> for every k >= 1.
bool is_free(const NumericalSemigroup& s);

/// S = N, or some bipartition (A,B) of the minimal generators with
/// d1 = gcd(A), d2 = gcd(B) coprime, d1 in <B/d2>, d2 in <A/d1>, and both
/// quotients recursively complete intersections.
bool is_complete_intersection(const NumericalSemigroup& s);

struct ClassificationReport {
  bool si = false;
  bool gsi = false;
  bool telescopic = false;
  bool free = false;
  bool complete_intersection = false;
  std::optional<CharacteristicSequenceReport> si_witness;
  std::optional<GluingSpec> gsi_witness;
};

ClassificationReport classify(const NumericalSemigroup& s);

}  // namespace gsi
