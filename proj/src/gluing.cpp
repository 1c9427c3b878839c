#include "gsi/gluing.hpp"

#include <algorithm>
#include <numeric>

namespace gsi {

namespace {

void check_gluing_args(const NumericalSemigroup&, Int d, Int gamma) {
  if (d < 2) raise(Errc::bad_factor, "gluing factor d must be >= 2, got " + std::to_string(d));
  if (gamma < 2) raise(Errc::bad_input, "gamma must be >= 2, got " + std::to_string(gamma));
  if (std::gcd(d, gamma) != 1)
    raise(Errc::not_coprime,
          "gcd(d=" + std::to_string(d) + ", gamma=" + std::to_string(gamma) + ") != 1");
}

// Throws not_gsi naming the first violated inequality.
void require_gsi(const GluingSpec& spec) {
  const Int df = checked_mul(spec.d, spec.base.frobenius());
  const Int dm = checked_mul(spec.d, spec.base.max_generator());
  if (spec.d < 2)
    raise(Errc::not_gsi, "d=" + std::to_string(spec.d) + " < 2");
  if (spec.gamma <= df)
    raise(Errc::not_gsi, "gamma=" + std::to_string(spec.gamma) +
                             " <= d*F(S)=" + std::to_string(df));
  if (spec.gamma <= dm)
    raise(Errc::not_gsi, "gamma=" + std::to_string(spec.gamma) +
                             " <= d*M(S)=" + std::to_string(dm));
}

}  // namespace

GluingSpec make_gluing_spec(NumericalSemigroup base, Int d, Int gamma) {
  check_gluing_args(base, d, gamma);
  GluingSpec spec;
  spec.base = std::move(base);
  spec.d = d;
  spec.gamma = gamma;
  spec.is_gsi = validate_gsi(spec);
  return spec;
}

bool validate_gsi(const GluingSpec& spec) {
  if (spec.d < 2) return false;
  const Int df = checked_mul(spec.d, spec.base.frobenius());
  const Int dm = checked_mul(spec.d, spec.base.max_generator());
  return spec.gamma > std::max(df, dm);
}

NumericalSemigroup glue(const NumericalSemigroup& base, Int d, Int gamma) {
  check_gluing_args(base, d, gamma);
  std::vector<Int> gens;
  gens.reserve(base.minimal_generators().size() + 1);
  for (Int v : base.minimal_generators()) gens.push_back(checked_mul(d, v));
  gens.push_back(gamma);
  return NumericalSemigroup::from_generators(gens);
}

NumericalSemigroup glue(const GluingSpec& spec) { return glue(spec.base, spec.d, spec.gamma); }

Int GsiGapPartition::total_size() const noexcept {
  Int n = initial_size() + static_cast<Int>(middle.size());
  for (const auto& block : a_blocks) n += static_cast<Int>(block.size());
  for (const auto& block : b_blocks) n += static_cast<Int>(block.size());
  return n;
}

std::vector<Int> GsiGapPartition::flatten() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(total_size()));
  for (Int x = initial_lo; x <= initial_hi; ++x) out.push_back(x);
  out.insert(out.end(), middle.begin(), middle.end());
  for (const auto& block : a_blocks) out.insert(out.end(), block.begin(), block.end());
  for (const auto& block : b_blocks) out.insert(out.end(), block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

GsiGapPartition gsi_gaps(const GluingSpec& spec) {
  require_gsi(spec);
  const NumericalSemigroup& base = spec.base;
  const Int d = spec.d;
  const Int gamma = spec.gamma;
  const Int v0 = base.multiplicity();

  GsiGapPartition p;
  p.initial_lo = 1;
  p.initial_hi = d * v0 - 1;

  for (Int x = d * v0 + 1; x < gamma; ++x)
    if (x % d != 0 || !base.contains(x / d)) p.middle.push_back(x);

  if (!base.is_naturals()) {
    const std::vector<Int> base_gaps = base.gaps();
    p.a_blocks.reserve(static_cast<std::size_t>(d - 1));
    for (Int k = 1; k <= d - 1; ++k) {
      std::vector<Int> block;
      block.reserve(base_gaps.size());
      for (Int g : base_gaps) block.push_back(checked_add(d * g, checked_mul(k, gamma)));
      p.a_blocks.push_back(std::move(block));
    }
  }

  if (d >= 3) {
    p.b_blocks.reserve(static_cast<std::size_t>(d - 2));
    for (Int ell = 1; ell <= d - 2; ++ell) {
      const Int lg = checked_mul(ell, gamma);
      const Int r = lg % d;
      const Int count = lg / d;
      std::vector<Int> block;
      block.reserve(static_cast<std::size_t>(count));
      for (Int k = 0; k < count; ++k) block.push_back(gamma + r + k * d);
      p.b_blocks.push_back(std::move(block));
    }
  }
  return p;
}

Int gsi_frobenius(const GluingSpec& spec) {
  require_gsi(spec);
  return checked_add(checked_mul(spec.d, spec.base.frobenius()),
                     checked_mul(spec.d - 1, spec.gamma));
}

Int gsi_genus(const GluingSpec& spec) { return gsi_gaps(spec).total_size(); }

}  // namespace gsi
