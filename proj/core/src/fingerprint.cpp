#include "contraction/fingerprint.hpp"

#include <algorithm>
#include <limits>

#include "contraction/error.hpp"
#include "contraction/sampling.hpp"

namespace contraction {

std::string to_string(RecoveryStatus s) {
  switch (s) {
    case RecoveryStatus::Ok:
      return "OK";
    case RecoveryStatus::AbelianCandidate:
      return "ABELIAN_CANDIDATE";
    case RecoveryStatus::InsufficientPrecision:
      return "INSUFFICIENT_PRECISION";
  }
  return "?";
}

std::string to_string(WindowVerdict v) {
  switch (v) {
    case WindowVerdict::Distinct:
      return "DISTINCT";
    case WindowVerdict::SameWindow:
      return "SAME_WINDOW";
    case WindowVerdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

DeltaProfile delta_profile(const CocycleSpec& spec, int window,
                           std::optional<int> budget) {
  if (window < 1) throw BadParams("fingerprint window must be >= 1");
  const Modulus& ring = spec.ring();
  const Series one = Series::monomial(ring, 1, 0);

  std::vector<Series> deltas;
  deltas.reserve(static_cast<std::size_t>(window));
  for (int m = 1; m <= window; ++m) {
    deltas.push_back(
        antisymmetrize(spec, one, Series::monomial(ring, 1, 2 * m)));
  }

  int slack = 0;
  if (budget) {
    slack = *budget;
  } else {
    int offset = std::numeric_limits<int>::max();
    for (int m = 1; m <= window; ++m) {
      if (auto v = deltas[m - 1].valuation()) offset = std::min(offset, *v - m);
    }
    if (offset == std::numeric_limits<int>::max()) offset = 0;
    slack = offset + 3;
  }

  DeltaProfile profile;
  profile.window = window;
  for (int m = 1; m <= window; ++m) {
    Series d = truncate(deltas[m - 1], m + slack);
    ProfileEntry e;
    e.m = m;
    e.vanishes = deltas[m - 1].is_exact_zero();
    if (auto v = d.valuation()) {
      e.v = *v;
    } else {
      e.bound = d.prec().value();
    }
    profile.entries.push_back(e);
  }
  return profile;
}

Recovery recover_bits(const DeltaProfile& profile) {
  if (profile.entries.empty()) throw BadParams("empty delta profile");
  Recovery r;
  std::optional<int> offset;
  for (const auto& e : profile.entries) {
    if (e.v) offset = offset ? std::min(*offset, *e.v - e.m) : *e.v - e.m;
  }
  std::vector<std::uint8_t> bits(profile.entries.size(), 0);
  if (!offset) {
    r.status = RecoveryStatus::AbelianCandidate;
    r.bits = BitSeq(std::move(bits));
    return r;
  }
  r.offset = *offset;
  for (std::size_t i = 0; i < profile.entries.size(); ++i) {
    const auto& e = profile.entries[i];
    if (e.v) {
      bits[i] = (*e.v - e.m == *offset) ? 1 : 0;
    } else if (*e.bound - e.m < *offset + 1) {
      r.status = RecoveryStatus::InsufficientPrecision;
      r.insufficient_at = e.m;
      return r;
    }
  }
  r.bits = BitSeq(std::move(bits));
  return r;
}

ProbeCheck random_probe_check(const CocycleSpec& spec, const Recovery& recovery,
                              int window, int probes_per_m, std::uint64_t seed) {
  ProbeCheck check;
  if (recovery.status != RecoveryStatus::Ok) return check;
  const Modulus& ring = spec.ring();
  const int c = recovery.offset;
  Rng rng(seed);
  for (int m = 1; m <= window; ++m) {
    const int bit = *recovery.bits->at(m);
    for (int i = 0; i < probes_per_m; ++i) {
      Series x = random_unit(rng, ring, 0, 3);
      Series y = shift(random_unit(rng, ring, 0, 3), 2 * m);
      Series d = antisymmetrize(spec, x, y);
      ++check.checked;
      bool ok;
      if (bit == 1) {
        ok = d.valuation() == m + c;
      } else {
        auto v = d.valuation();
        ok = v ? *v >= m + c + 1
               : (d.is_exact() || d.prec().value() >= m + c + 1);
      }
      if (!ok) {
        ++check.mismatched;
        if (check.witnesses.size() < 8) {
          check.witnesses.push_back("m=" + std::to_string(m) + " x=" +
                                    format_series(x) + " y=" + format_series(y) +
                                    " delta=" + format_series(d));
        }
      }
    }
  }
  return check;
}

WindowVerdict equivalent_on_window(const CocycleSpec& a, const CocycleSpec& b,
                                   int window, std::optional<int> budget) {
  return compare_profiles(delta_profile(a, window, budget),
                          delta_profile(b, window, budget));
}

WindowVerdict compare_profiles(const DeltaProfile& pa, const DeltaProfile& pb) {
  if (pa.window != pb.window) {
    throw BadParams("compare_profiles: windows " + std::to_string(pa.window) +
                    " and " + std::to_string(pb.window) + " differ");
  }
  Recovery ra = recover_bits(pa);
  Recovery rb = recover_bits(pb);
  if (ra.status == RecoveryStatus::InsufficientPrecision ||
      rb.status == RecoveryStatus::InsufficientPrecision) {
    return WindowVerdict::Inconclusive;
  }
  auto symmetric = [](const DeltaProfile& p) {
    return std::all_of(p.entries.begin(), p.entries.end(),
                       [](const ProfileEntry& e) { return e.vanishes; });
  };
  const bool abelian_a = ra.status == RecoveryStatus::AbelianCandidate;
  const bool abelian_b = rb.status == RecoveryStatus::AbelianCandidate;
  if ((abelian_a && !symmetric(pa)) || (abelian_b && !symmetric(pb))) {
    return WindowVerdict::Inconclusive;
  }
  return *ra.bits == *rb.bits ? WindowVerdict::SameWindow
                              : WindowVerdict::Distinct;
}

}  // namespace contraction
