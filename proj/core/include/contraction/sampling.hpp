#pragma once

#include <cstdint>
#include <random>

#include "contraction/cocycle.hpp"
#include "contraction/series.hpp"

namespace contraction {

/// Seeded generator with plain modulo reduction.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool coin() { return (engine_() & 1) != 0; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Exact series with random coefficients at indices [lo, hi].
Series random_series(Rng& rng, const Modulus& ring, int lo, int hi);
/// Exact series with a unit coefficient at `val` and random coefficients at
/// val+1..val+extra.
Series random_unit(Rng& rng, const Modulus& ring, int val, int extra);
/// Random residue that is a unit.
Residue random_unit_residue(Rng& rng, const Modulus& ring);
/// A window of `length` bits; forced nonzero when `nonzero` is set.
BitSeq random_bits(Rng& rng, int length, bool nonzero = false);
/// Entries on [lo, hi] with val(a_n) >= n for n >= 0 and
/// val(t^k a_-k) >= 1 for k > 0; zero tails.
ParamSeq random_param_seq(Rng& rng, const Modulus& ring, int lo, int hi);
/// Between 1 and max_terms terms u_k omega_k(x, x) with k in [k_lo, k_hi].
QuadTerms random_quad_terms(Rng& rng, const Modulus& ring, int max_terms,
                            int k_lo, int k_hi);

}  // namespace contraction
