#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contraction/checks.hpp"
#include "contraction/cocycle.hpp"
#include "contraction/series.hpp"

namespace contraction {

/// An element (a, g) of the central extension A x_omega G, where A and G are
/// both the additive group of Laurent series over the spec's ring and G acts
/// trivially on A. The group law is
///   (a1, g1)(a2, g2) = (a1 + a2 + omega(g1, g2), g1 + g2).
class ExtElement {
 public:
  ExtElement(Series a, Series g, SpecRef spec);

  const Series& a() const noexcept { return a_; }
  const Series& g() const noexcept { return g_; }
  const SpecRef& spec() const noexcept { return spec_; }
  const Modulus& ring() const noexcept { return spec_->ring(); }

  /// Identical coefficients and precisions over the same spec.
  friend bool operator==(const ExtElement& l, const ExtElement& r) {
    return l.a_ == r.a_ && l.g_ == r.g_ && *l.spec_ == *r.spec_;
  }

 private:
  Series a_;
  Series g_;
  SpecRef spec_;
};

ExtElement ext_identity(const SpecRef& spec);
/// iota(a) = (a, 0).
ExtElement ext_iota(const SpecRef& spec, const Series& a);
/// sigma(g) = (0, g), the canonical section of pr2.
ExtElement ext_sigma(const SpecRef& spec, const Series& g);

/// Throws SpecMismatch when u and v belong to different extensions.
ExtElement ext_mul(const ExtElement& u, const ExtElement& v);
/// (a, g)^-1 = (-a - omega(g, -g), -g).
ExtElement ext_inv(const ExtElement& u);
/// (alpha_A x alpha)^k: both components shifted by k.
ExtElement ext_alpha(const ExtElement& u, int k);
/// u v u^-1 v^-1.
ExtElement commutator(const ExtElement& u, const ExtElement& v);

/// Both components agree wherever both are known.
bool ext_agree(const ExtElement& u, const ExtElement& v);

struct CenterVerdict {
  bool central = true;
  std::optional<int> probe;       // degree j of the witnessing probe t^j
  std::optional<Series> witness;  // omega(g, t^j) - omega(t^j, g) != 0
};

/// Tests omega(g_u, t^j) = omega(t^j, g_u) for each probe degree j. Throws
/// WindowTooSmall when no probe separates and some probe is undetermined.
CenterVerdict center_test(const ExtElement& u, const std::vector<int>& probes);

/// The degree at which a noncentral element is guaranteed a witness for
/// eta-type specs: 2 n0 + val(g). nullopt if s vanishes on its window, g is
/// zero, or the spec is not eta-based.
std::optional<int> center_witness_degree(const ExtElement& u);

/// The extension spec omega + omega_f for f(x) = sum_k u_k omega_k(x, x).
SpecRef add_coboundary(const SpecRef& base, const QuadTerms& f_terms);

/// The equivalence A x_omega G -> A x_{omega + omega_f} G of extensions,
/// (a, g) -> (a - f(g), g). It fixes iota(A), commutes with pr2 and with the
/// contractive automorphism. `target` must equal add_coboundary(u.spec(), f).
ExtElement equivalence_map(const QuadTerms& f_terms, const ExtElement& u,
                           const SpecRef& target);
/// The inverse direction, (a, g) -> (a + f(g), g).
ExtElement equivalence_map_inverse(const QuadTerms& f_terms,
                                   const ExtElement& u, const SpecRef& source);

struct ExtTriple {
  ExtElement u, v, w;
};

/// Checks [u, v] in A x {0} and [[u, v], w] = e on every sample.
CheckReport nilpotency_probe(const std::vector<ExtTriple>& samples);

/// "(<series> ; <series>)"
ExtElement parse_ext_element(const SpecRef& spec, std::string_view text);
std::string format_ext_element(const ExtElement& u);

}  // namespace contraction
