#include "gsi/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gsi {

void raise(Errc code, const std::string& what) { throw Error(code, what); }

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) raise(Errc::overflow, "integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) raise(Errc::overflow, "integer overflow in multiplication");
  return r;
}

const NumericalSemigroup& NumericalSemigroup::naturals() {
  static const NumericalSemigroup n;
  return n;
}

bool NumericalSemigroup::contains(Int n) const noexcept {
  if (n < 0) return false;
  if (n > frobenius_) return true;
  return membership_[static_cast<std::size_t>(n)];
}

namespace {

// Extracts the canonical data from a membership table.  mem must be valid on
// [0, conductor + multiplicity); beyond the conductor everything is a member.
template <typename MemberFn>
void fill_from_table(Int frobenius, MemberFn mem, std::vector<Int>& out_gens, Int& out_genus) {
  const Int conductor = frobenius + 1;
  Int m = 1;
  while (!mem(m)) ++m;

  out_genus = 0;
  for (Int x = 1; x < conductor; ++x)
    if (!mem(x)) ++out_genus;

  // A minimal generator is a member that is not a sum of two smaller nonzero
  // members; all of them lie below conductor + multiplicity.
  out_gens.clear();
  for (Int v = m; v < conductor + m; ++v) {
    if (!mem(v)) continue;
    bool decomposable = false;
    for (Int a = m; a + a <= v; ++a) {
      if (mem(a) && mem(v - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out_gens.push_back(v);
  }
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_membership_table(
    const std::vector<char>& table, Int frobenius) {
  if (frobenius == -1) return naturals();
  if (frobenius < 1 || table.size() != static_cast<std::size_t>(frobenius) + 1)
    raise(Errc::bad_input, "membership table must cover [0, frobenius]");
  if (!table[0] || table[static_cast<std::size_t>(frobenius)])
    raise(Errc::bad_input, "membership table must contain 0 and exclude the frobenius number");

  NumericalSemigroup s;
  s.frobenius_ = frobenius;
  auto mem = [&](Int x) { return x > frobenius || table[static_cast<std::size_t>(x)] != 0; };
  fill_from_table(frobenius, mem, s.minimal_generators_, s.genus_);
  s.membership_.assign(static_cast<std::size_t>(frobenius) + 2, true);
  for (Int x = 0; x <= frobenius; ++x)
    s.membership_[static_cast<std::size_t>(x)] = table[static_cast<std::size_t>(x)] != 0;
  return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Int>& gens) {
  if (gens.empty()) raise(Errc::empty_or_zero, "generator list is empty");
  std::vector<Int> g;
  g.reserve(gens.size());
  for (Int x : gens) {
    if (x < 1) raise(Errc::empty_or_zero, "generators must be >= 1, got " + std::to_string(x));
    g.push_back(x);
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());

  Int d = 0;
  for (Int x : g) d = std::gcd(d, x);
  if (d != 1)
    raise(Errc::not_numerical, "gcd of generators is " + std::to_string(d) + ", not 1");
  if (g.front() == 1) return naturals();

  // Sieve bound: Sylvester's number of the first coprime pair dominates the
  // Frobenius number; without a coprime pair fall back to the product of the
  // two smallest generators and grow on demand.
  Int bound = -1;
  for (std::size_t i = 0; i + 1 < g.size() && bound < 0; ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (std::gcd(g[i], g[j]) == 1) {
        bound = checked_mul(g[i], g[j]) - g[i] - g[j];
        break;
      }
    }
  }
  if (bound < 0) bound = checked_mul(g[0], g[1]);

  const Int m = g.front();
  Int limit = checked_add(bound, m);
  std::vector<char> table;
  Int conductor = -1;
  for (;;) {
    table.assign(static_cast<std::size_t>(limit) + 1, 0);
    table[0] = 1;
    for (Int x = m; x <= limit; ++x) {
      for (Int gen : g) {
        if (gen > x) break;
        if (table[static_cast<std::size_t>(x - gen)]) {
          table[static_cast<std::size_t>(x)] = 1;
          break;
        }
      }
    }
    // A run of multiplicity-many consecutive members pins the conductor.
    Int run = 0;
    for (Int x = 0; x <= limit; ++x) {
      run = table[static_cast<std::size_t>(x)] ? run + 1 : 0;
      if (run == m) {
        conductor = x - m + 1;
        break;
      }
    }
    if (conductor >= 0) break;
    limit = checked_mul(limit, 2);
  }

  NumericalSemigroup s;
  s.frobenius_ = conductor - 1;
  auto mem = [&](Int x) {
    return x >= conductor || table[static_cast<std::size_t>(x)] != 0;
  };
  fill_from_table(s.frobenius_, mem, s.minimal_generators_, s.genus_);
  s.membership_.assign(static_cast<std::size_t>(conductor) + 1, true);
  for (Int x = 0; x < conductor; ++x)
    s.membership_[static_cast<std::size_t>(x)] = table[static_cast<std::size_t>(x)] != 0;
  return s;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Int x = 1; x <= frobenius_; ++x)
    if (!membership_[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n < 1) raise(Errc::bad_input, "apery_set needs n >= 1");
  if (!contains(n))
    raise(Errc::not_member, std::to_string(n) + " is not a member of " + to_string());
  std::vector<Int> ap(static_cast<std::size_t>(n), -1);
  Int remaining = n;
  for (Int x = 0; remaining > 0; ++x) {
    if (!contains(x)) continue;
    Int& slot = ap[static_cast<std::size_t>(x % n)];
    if (slot < 0) {
      slot = x;
      --remaining;
    }
  }
  return ap;
}

std::string NumericalSemigroup::to_string() const {
  std::string out = "⟨";
  for (std::size_t i = 0; i < minimal_generators_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(minimal_generators_[i]);
  }
  out += "⟩";
  return out;
}

Int frobenius_two_generators(Int a, Int b) {
  if (a < 2 || b <= a) raise(Errc::bad_input, "need 2 <= a < b");
  if (std::gcd(a, b) != 1)
    raise(Errc::not_coprime, "gcd(" + std::to_string(a) + "," + std::to_string(b) + ") != 1");
  return checked_mul(a, b) - a - b;
}

std::vector<Int> parse_generators(const std::string& text) {
  std::vector<Int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t pos = 0;
      Int v = std::stoll(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      raise(Errc::bad_input, "not an integer: '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token += c;
  }
  flush();
  if (out.empty()) raise(Errc::empty_or_zero, "no generators given");
  return out;
}

}  // namespace gsi
