#include "contraction/sampling.hpp"

#include <algorithm>

namespace contraction {

Series random_series(Rng& rng, const Modulus& ring, int lo, int hi) {
  std::vector<std::int64_t> coeffs;
  for (int i = lo; i <= hi; ++i) coeffs.push_back(rng.between(0, ring.order() - 1));
  return Series::make(ring, lo, coeffs, Prec::exact());
}

Residue random_unit_residue(Rng& rng, const Modulus& ring) {
  for (;;) {
    Residue r = rng.between(1, ring.order() - 1);
    if (ring.is_unit(r)) return r;
  }
}

Series random_unit(Rng& rng, const Modulus& ring, int val, int extra) {
  std::vector<std::int64_t> coeffs{random_unit_residue(rng, ring)};
  for (int i = 0; i < extra; ++i) coeffs.push_back(rng.between(0, ring.order() - 1));
  return Series::make(ring, val, coeffs, Prec::exact());
}

BitSeq random_bits(Rng& rng, int length, bool nonzero) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  for (auto& b : bits) b = rng.coin() ? 1 : 0;
  if (nonzero && std::none_of(bits.begin(), bits.end(), [](auto b) { return b; })) {
    bits[static_cast<std::size_t>(rng.between(0, length - 1))] = 1;
  }
  return BitSeq(std::move(bits));
}

ParamSeq random_param_seq(Rng& rng, const Modulus& ring, int lo, int hi) {
  std::map<int, Series> entries;
  for (int n = lo; n <= hi; ++n) {
    if (rng.between(0, 3) == 0) continue;
    int floor = n >= 0 ? n : 1 + n;
    int val = floor + static_cast<int>(rng.between(0, 2));
    entries.emplace(n, random_series(rng, ring, val, val + 2));
  }
  return ParamSeq(ring, lo, hi, std::move(entries));
}

QuadTerms random_quad_terms(Rng& rng, const Modulus& ring, int max_terms,
                            int k_lo, int k_hi) {
  QuadTerms terms;
  const int count = static_cast<int>(rng.between(1, max_terms));
  for (int i = 0; i < count; ++i) {
    int k = static_cast<int>(rng.between(k_lo, k_hi));
    int val = static_cast<int>(rng.between(0, 2));
    terms.push_back({k, random_series(rng, ring, val, val + 2)});
  }
  return terms;
}

}  // namespace contraction
