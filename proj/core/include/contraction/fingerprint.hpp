#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contraction/cocycle.hpp"

namespace contraction {

// Bit recovery for the family omega = a * eta_s(b x, b y) + beta with units
// a, b and a symmetric coboundary beta.
//
// The probe is delta_m = omega(t^0, t^2m) - omega(t^2m, t^0). The coboundary
// is symmetric and drops out, so delta_m = a * D_s(b, b t^2m) where
// D_s(x, y) = eta_s(x, y) - eta_s(y, x). Writing b = t^k b' with |b'| = 1 and
// using equivariance, delta_m = a t^k D_s(b', b' t^2m). For |x| = 1 and
// |y| = p^-2m the antisymmetric part has |D_s(x, y)| = p^-m when s_m = 1 and
// |D_s(x, y)| < p^-m when s_m = 0 (for m below the first set bit n0 both eta
// terms are bounded by p^-n0). Hence, with c = val(a) + val(b),
//   v_m := -log_p |delta_m|  is  m + c  if s_m = 1,  and  >= m + c + 1 otherwise.
// The unknown offset c is the minimum of v_m - m over exact entries, and the
// bits follow from whether v_m - m equals c.

/// v_m for one window index: exact, or a certified lower bound v_m >= bound.
struct ProfileEntry {
  int m = 0;
  std::optional<int> v;
  std::optional<int> bound;
  bool vanishes = false;  // delta_m is the exact zero before truncation
};

struct DeltaProfile {
  int window = 0;
  std::vector<ProfileEntry> entries;  // m = 1..window
};

/// Computes delta_m for m in [1, window]. Each delta_m is truncated to
/// precision m + budget. Without a budget the planner first finds the offset c
/// and truncates to m + c + 3, two indices past what bit m needs.
DeltaProfile delta_profile(const CocycleSpec& spec, int window,
                           std::optional<int> budget = std::nullopt);

enum class RecoveryStatus { Ok, AbelianCandidate, InsufficientPrecision };

std::string to_string(RecoveryStatus s);

struct Recovery {
  RecoveryStatus status = RecoveryStatus::Ok;
  int offset = 0;                       // c; meaningful when status == Ok
  std::optional<BitSeq> bits;           // s_1..s_M when status != Insufficient
  std::optional<int> insufficient_at;   // the m that could not be certified
};

Recovery recover_bits(const DeltaProfile& profile);

/// Cross-check with random probes x, y with |x| = 1, |y| = p^-2m: the class of
/// v_m - m (equal to c or larger) must match the canonical probe. Nothing is
/// checked unless recovery.status is Ok.
struct ProbeCheck {
  int checked = 0;
  int mismatched = 0;
  std::vector<std::string> witnesses;
};

ProbeCheck random_probe_check(const CocycleSpec& spec, const Recovery& recovery,
                              int window, int probes_per_m, std::uint64_t seed);

enum class WindowVerdict { Distinct, SameWindow, Inconclusive };

std::string to_string(WindowVerdict v);

/// DISTINCT when the recovered bit windows differ; SAME_WINDOW when they agree
/// (which says nothing beyond the window). An abelian candidate only counts as
/// the zero window when every delta_m is the exact zero; otherwise the verdict
/// is INCONCLUSIVE.
WindowVerdict equivalent_on_window(const CocycleSpec& a, const CocycleSpec& b,
                                   int window,
                                   std::optional<int> budget = std::nullopt);
/// The same verdict from precomputed profiles of equal window. Throws
/// BadParams otherwise.
WindowVerdict compare_profiles(const DeltaProfile& a, const DeltaProfile& b);

}  // namespace contraction
