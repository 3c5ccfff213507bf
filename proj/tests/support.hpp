#pragma once

#include <map>
#include <optional>

#include "contraction/cocycle.hpp"
#include "contraction/sampling.hpp"
#include "contraction/series.hpp"

namespace contraction::testing {

inline Series S(const Modulus& ring, std::string_view text) {
  return parse_series(ring, text);
}

/// Coefficient function with an optional precision, independent of Series.
struct Dense {
  std::map<int, std::int64_t> c;  // nonzero coefficients only
  std::optional<int> prec;

  static Dense of(const Series& x) {
    Dense d;
    for (int i = x.start(); i < x.end(); ++i) {
      if (auto v = x.at(i); v && *v != 0) d.c[i] = *v;
    }
    d.prec = x.prec().bound();
    return d;
  }

  bool known(int i) const { return !prec || i < *prec; }
  std::int64_t at(int i) const {
    auto it = c.find(i);
    return it == c.end() ? 0 : it->second;
  }
};

/// Random series that may be truncated; coefficients in [lo, hi].
inline Series random_maybe_truncated(Rng& rng, const Modulus& ring, int lo,
                                     int hi) {
  Series x = random_series(rng, ring, lo, hi);
  if (rng.coin()) return x;
  return truncate(x, static_cast<int>(rng.between(lo, hi + 3)));
}

}  // namespace contraction::testing
