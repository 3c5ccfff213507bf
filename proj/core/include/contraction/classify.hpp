#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contraction/rational_poly.hpp"
#include "contraction/series.hpp"

namespace contraction {

/// A finite abelian group given by the orders of its cyclic factors.
struct FiniteAbelianType {
  std::vector<std::int64_t> orders;  // each >= 2
};

/// (p, n) -> nu(p, n), the multiplicity of F_{p^n}((t)). Zero entries are
/// never stored.
using NuTable = std::map<std::pair<std::int64_t, int>, std::int64_t>;

/// Splits each cyclic order into prime powers and tallies them. Throws
/// BadParams for an order below 2.
NuTable primary_decompose(const FiniteAbelianType& f);

/// Equality of tables, which decides isomorphism of the corresponding
/// torsion contraction groups.
bool iso_test(const NuTable& a, const NuTable& b);

/// Direct sum of two tables.
NuTable direct_sum(const NuTable& a, const NuTable& b);

struct CompositionData {
  std::vector<int> chain;  // exponents j of p^j F_{p^m}((t)), from m down to 0
  std::int64_t length = 0;
  BigInt delta = 1;
};

/// The chain p^m F > ... > p^0 F of F_{p^m}((t)), with length m and
/// Delta(alpha^-1) = p^m. Throws BadParams unless p is prime and m >= 1.
CompositionData composition_data(std::int64_t p, int m);
/// length = sum n nu(p, n), Delta = prod p^(n nu(p, n)); the chain is empty.
CompositionData composition_data(const NuTable& table);

/// The exponent k with order p^k of an exact x over Z/p^m; 0 for x = 0.
/// Throws NotExact.
int element_order_exponent(const Series& x);
/// p^k.
std::int64_t element_order(const Series& x);

/// theta_x(z) = sum_j z_j t^j x for x of order p^k and z over Z/p^k. A
/// truncated z yields a result known below prec(z) + start(x). Throws
/// OrderMismatch when z's ring is not Z/p^k, NotExact when x is truncated.
Series theta_x(const Series& x, const Series& z);

/// The k with <x>_alpha = p^(m-k) F_{p^m}((t)). Throws NotExact, and
/// MalformedInput if a coefficient of x falls outside p^(m-k) Z/p^m.
int stable_subgroup_locate(const Series& x);

/// All complex roots strictly inside the unit circle, by exact Schur-Cohn
/// reduction over Q.
bool schur_cohn(const RationalPoly& f);

/// All roots in an algebraic closure of Q_p have |root|_p < 1, decided by
/// v_p(a_i) >= 1 for every i < deg f.
bool omega_p_contractive(const RationalPoly& f, std::int64_t p);

/// A place of Q: a prime, or the archimedean place when empty.
struct Place {
  std::optional<std::int64_t> prime;

  static Place infinity() { return {}; }
  static Place at(std::int64_t p) { return {p}; }
  bool is_infinite() const noexcept { return !prime; }
  /// "inf" or "p:<prime>".
  std::string to_string() const;
  /// Throws SyntaxError or BadParams.
  static Place parse(std::string_view text);

  friend bool operator==(const Place&, const Place&) = default;
};

/// The contractivity test for f at `place`.
bool contractive_at(const Place& place, const RationalPoly& f);
/// "schur-cohn" or "p-adic-valuation".
std::string test_name(const Place& place);

/// mult copies of the block E_{f^n} over the completion at `place`.
struct LinearBlock {
  Place place;
  RationalPoly f;
  int n = 1;
  std::int64_t mult = 1;

  friend bool operator==(const LinearBlock&, const LinearBlock&) = default;
};

struct ContractionSpec {
  std::vector<LinearBlock> blocks;
  NuTable torsion;

  friend bool operator==(const ContractionSpec&, const ContractionSpec&) = default;
};

/// Checks every block, merges repeated (place, f, n) entries and sorts by
/// place (infinity first, then primes ascending), degree, coefficients, n.
/// Throws NotContractive for a failing block and MalformedInput for n < 1 or
/// a multiplicity below 1. Irreducibility of f is not checked.
ContractionSpec canonicalize_spec(const ContractionSpec& spec);
bool spec_iso_test(const ContractionSpec& a, const ContractionSpec& b);

}  // namespace contraction
