#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contraction/checks.hpp"
#include "contraction/extension.hpp"
#include "contraction/series.hpp"

namespace contraction {

/// Data for the digit-expansion construction of an equivariant section of a
/// surjective morphism q: (G, alpha) -> (H, beta).
///
/// H is always a Laurent series group over `h_ring` with beta the shift and
/// U the coefficient ball, so h lies in beta^n(U) iff its coefficients below n
/// vanish. reps[j] and lifts[j] are h_j and g_j, with index 0 the identity.
template <class G>
struct SectionContext {
  SectionContext(std::string name_, Modulus h_ring_)
      : name(std::move(name_)), h_ring(h_ring_) {}

  std::string name;
  Modulus h_ring;
  std::vector<Series> reps;
  std::vector<G> lifts;

  std::function<Series(const G&)> q;
  std::function<G()> identity;
  std::function<G(const G&, const G&)> mul;
  std::function<G(const G&, int)> alpha;
  /// partial * tau, where tau stands for the unknown element of
  /// alpha^{upto+1}(V); the result carries the certified precision.
  std::function<G(const G&, int upto)> certify;
  /// Exact equality.
  std::function<bool(const G&, const G&)> equal;
  /// Equality wherever both sides are known.
  std::function<bool(const G&, const G&)> agree;
  std::function<bool(const G&)> in_v;
  /// One past the last index known in every component.
  std::function<int(const G&)> known_through;
  std::function<std::string(const G&)> format;

  std::size_t ell() const noexcept { return reps.size(); }
};

using ModRedContext = SectionContext<Series>;
using ExtProjContext = SectionContext<ExtElement>;

/// q: Z/p^m((t)) -> Z/p^k((t)), reduction mod p^k. Reps and lifts are c t^0
/// for c in [0, p^k). Throws BadParams unless 1 <= k <= m.
ModRedContext make_mod_reduction_ctx(std::int64_t p, int m, int k);

/// pr2: A x_omega A -> A with reps c t^0 and lifts (0, c t^0) for c ranging
/// over the coefficient ring. V is t^r A[[t]] x A[[t]] with
/// r = min(0, ball_image_floor(spec)); throws BadParams if no floor is known.
ExtProjContext make_ext_projection_ctx(const SpecRef& spec);

/// Digits j_level..j_upto, indices into ctx.reps.
struct Digits {
  int level = 0;
  std::vector<std::size_t> j;
};

/// The level is min(0, start(h)). Each digit is the unique j with
/// z_k in beta^k(h_j) beta^{k+1}(U), checked against every representative;
/// z_{k+1} = beta^k(h_j)^-1 z_k. Throws InsufficientPrecision when h is not
/// known through index `upto`, and MalformedInput when h is over another ring
/// or a coset has no (or more than one) representative.
template <class G>
Digits digit_expand(const SectionContext<G>& ctx, const Series& h, int upto);

template <class G>
struct SectionValue {
  Digits digits;
  G partial;    // alpha^m(g_{j_m}) ... alpha^upto(g_{j_upto}), left to right
  G certified;  // partial * alpha^{upto+1}(V) at tracked precision
  int agrees_through = 0;  // last index known in every component of certified
};

template <class G>
SectionValue<G> build_section(const SectionContext<G>& ctx, const Series& h,
                              int upto);

/// For every sample h: q(sigma(h)) agrees with h, the partial product for
/// beta(h) at upto+1 equals alpha of the one for h at upto exactly, the
/// certified values of both sides agree, and sigma(e) = e.
template <class G>
CheckReport verify_section(const SectionContext<G>& ctx,
                           const std::vector<Series>& samples, int upto);

/// Problems with the context data, empty when it satisfies every invariant.
template <class G>
std::vector<std::string> validate(const SectionContext<G>& ctx);

/// A copy with a different lift table. No validation, so a corrupted table
/// can be used as a negative control.
template <class G>
SectionContext<G> replace_lifts(const SectionContext<G>& ctx,
                                std::vector<G> lifts);

}  // namespace contraction
