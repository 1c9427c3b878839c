#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsi {

using Int = std::int64_t;

enum class Errc {
  empty_or_zero,       // empty generator list, or a generator < 1
  not_numerical,       // gcd of generators != 1
  not_coprime,
  not_member,
  not_characteristic,
  not_gsi,
  bad_factor,          // gluing factor d < 2
  bad_frobenius,
  bad_input,
  overflow,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

// 64-bit arithmetic that refuses to wrap around.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// A numerical semigroup in canonical form: the minimal generating system
/// together with a membership table up to the conductor.  Values are
/// immutable once built and cheap to copy; every operation is a pure
/// function, so instances can be shared freely across threads.
class NumericalSemigroup {
public:
  /// Default-constructs the naturals (frobenius -1).
  NumericalSemigroup() : minimal_generators_{1}, membership_{true} {}

  /// Canonicalize <gens>.  The minimal generating system is recomputed from
  /// scratch, so any generating set of the same semigroup yields the same
  /// value.  Throws Errc::empty_or_zero / Errc::not_numerical.
  static NumericalSemigroup from_generators(const std::vector<Int>& gens);

  /// Build from a membership table covering [0, frobenius].  x > frobenius
  /// is implied to be a member.  The caller warrants that the table is
  /// additively closed; invariants derivable from the table (minimal
  /// generators, genus, multiplicity) are recomputed here.
  static NumericalSemigroup from_membership_table(
      const std::vector<char>& member_upto_frobenius, Int frobenius);

  /// The semigroup of all nonnegative integers (frobenius -1).
  static const NumericalSemigroup& naturals();

  const std::vector<Int>& minimal_generators() const noexcept { return minimal_generators_; }
  Int frobenius() const noexcept { return frobenius_; }
  Int conductor() const noexcept { return frobenius_ + 1; }
  Int genus() const noexcept { return genus_; }
  Int multiplicity() const noexcept { return minimal_generators_.front(); }
  Int embedding_dimension() const noexcept { return static_cast<Int>(minimal_generators_.size()); }
  /// M(S): the largest minimal generator.
  Int max_generator() const noexcept { return minimal_generators_.back(); }
  bool is_naturals() const noexcept { return frobenius_ == -1; }

  bool contains(Int n) const noexcept;

  /// Sorted gaps; empty exactly for the naturals, otherwise ends at frobenius.
  std::vector<Int> gaps() const;

  /// Apery set of n: entry i is the least member congruent to i mod n.
  /// Requires n >= 1 and n a member (Errc::not_member otherwise).
  std::vector<Int> apery_set(Int n) const;

  /// Renders as "<a,b,c>" with angle brackets.
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.minimal_generators_ == b.minimal_generators_;
  }
  friend bool operator<(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.minimal_generators_ < b.minimal_generators_;
  }

private:
  std::vector<Int> minimal_generators_;
  std::vector<bool> membership_;  // [0, conductor]
  Int frobenius_ = -1;
  Int genus_ = 0;
};

/// Sylvester's formula a*b - a - b.  Requires 2 <= a < b and gcd(a,b) = 1
/// (Errc::not_coprime otherwise).
Int frobenius_two_generators(Int a, Int b);

/// Parses comma- or space-separated positive integers.
std::vector<Int> parse_generators(const std::string& text);

}  // namespace gsi
