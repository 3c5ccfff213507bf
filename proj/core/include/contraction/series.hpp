#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contraction/modulus.hpp"

namespace contraction {

/// Precision of a series: either a finite bound P (coefficients at indices
/// >= P are unknown) or exact (finitely supported).
class Prec {
 public:
  static constexpr Prec exact() noexcept { return Prec(); }
  static constexpr Prec at(int p) noexcept { return Prec(p); }

  constexpr bool is_exact() const noexcept { return !value_.has_value(); }
  /// Only meaningful when !is_exact().
  constexpr int value() const noexcept { return *value_; }
  constexpr std::optional<int> bound() const noexcept { return value_; }

  /// Shift a finite bound by `k`; exact stays exact.
  constexpr Prec shifted(int k) const noexcept {
    return is_exact() ? Prec() : Prec(*value_ + k);
  }

  friend constexpr Prec min(Prec a, Prec b) noexcept {
    if (a.is_exact()) return b;
    if (b.is_exact()) return a;
    return Prec(a.value() < b.value() ? a.value() : b.value());
  }

  friend constexpr bool operator==(const Prec&, const Prec&) = default;

 private:
  constexpr Prec() = default;
  constexpr explicit Prec(int p) : value_(p) {}

  std::optional<int> value_;
};

/// |x| = p^-v. `exponent` holds v; an empty exponent is the value 0.
struct AbsValue {
  enum class Kind { Exact, UpperBound };

  Kind kind = Kind::Exact;
  std::optional<int> exponent;

  static AbsValue exact(int v) { return {Kind::Exact, v}; }
  static AbsValue zero() { return {Kind::Exact, std::nullopt}; }
  static AbsValue upper_bound(int v) { return {Kind::UpperBound, v}; }

  bool is_exact() const noexcept { return kind == Kind::Exact; }
  bool is_zero() const noexcept { return is_exact() && !exponent; }

  std::string to_string(std::int64_t p) const;

  friend bool operator==(const AbsValue&, const AbsValue&) = default;
};

/// A truncated formal Laurent series over Z/p^m.
///
/// Coefficients at indices below start() are zero, those in
/// [start(), prec()) are stored, those at or above prec() are unknown. An exact
/// series has no unknown coefficients and is finitely supported.
///
/// Canonical form: the first stored coefficient is nonzero, or nothing is
/// stored. Exact series additionally have a nonzero last coefficient, and the
/// exact zero has start 0. Truncated series store exactly prec - start
/// coefficients, so a truncated zero has start == prec. Two series with the
/// same coefficient function and precision are identical member by member.
class Series {
 public:
  /// Builds a canonical series. Residues are reduced mod p^m. Gaps between
  /// start + coeffs.size() and a finite `prec` are filled with zeros.
  /// Throws MalformedInput if prec < start + coeffs.size().
  static Series make(const Modulus& ring, int start,
                     const std::vector<std::int64_t>& coeffs, Prec prec);

  static Series zero(const Modulus& ring) {
    return make(ring, 0, {}, Prec::exact());
  }
  /// The truncated zero O(t^prec).
  static Series unknown_from(const Modulus& ring, int prec) {
    return make(ring, prec, {}, Prec::at(prec));
  }
  /// c * t^k, exact.
  static Series monomial(const Modulus& ring, std::int64_t c, int k) {
    return make(ring, k, {c}, Prec::exact());
  }

  const Modulus& ring() const noexcept { return ring_; }
  int start() const noexcept { return start_; }
  /// One past the last stored index.
  int end() const noexcept { return start_ + static_cast<int>(coeffs_.size()); }
  Prec prec() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_.is_exact(); }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  /// Coefficient at index i, or nullopt if it is unknown.
  std::optional<Residue> at(int i) const noexcept;
  bool known_zero(int i) const noexcept {
    auto c = at(i);
    return c && *c == 0;
  }

  /// Index of the least known nonzero coefficient.
  std::optional<int> valuation() const noexcept;
  /// No known nonzero coefficient (exact zero or indistinguishable from zero).
  bool is_zero_at_precision() const noexcept { return coeffs_.empty(); }
  bool is_exact_zero() const noexcept { return is_exact() && coeffs_.empty(); }

  AbsValue abs() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  Series(Modulus ring, int start, std::vector<Residue> coeffs, Prec prec)
      : ring_(ring), start_(start), coeffs_(std::move(coeffs)), prec_(prec) {}

  Modulus ring_;
  int start_ = 0;
  std::vector<Residue> coeffs_;
  Prec prec_ = Prec::exact();
};

Series add(const Series& x, const Series& y);
Series sub(const Series& x, const Series& y);
Series negate(const Series& x);
/// k * x coefficientwise mod p^m.
Series int_mul(std::int64_t k, const Series& x);
/// The shift automorphism to the power k: x -> t^k x.
Series shift(const Series& x, int k);
/// Cauchy product; result precision is min(prec_x + start_y, prec_y + start_x).
Series ring_mul(const Series& x, const Series& y);
/// Lower the precision to at most `p`.
Series truncate(const Series& x, int p);

/// Reduction Z/p^m -> Z/p^k (k <= m) applied to every coefficient.
Series reduce_to(const Series& x, const Modulus& target);
/// Coefficientwise lift Z/p^k -> Z/p^m (k <= m) by least nonnegative residues.
Series lift_to(const Series& x, const Modulus& target);

/// x and y agree on every index where both are known.
bool agree(const Series& x, const Series& y);

inline Series operator+(const Series& x, const Series& y) { return add(x, y); }
inline Series operator-(const Series& x, const Series& y) { return sub(x, y); }
inline Series operator-(const Series& x) { return negate(x); }

/// Parses the series grammar
///   series := "0" | "O(t^" INT ")" | term (" + " term)* [" + O(t^" INT ")"]
///   term   := COEFF "*t^" INT | "t^" INT
/// with COEFF in [0, p^m) and strictly ascending powers. Throws SyntaxError.
Series parse_series(const Modulus& ring, std::string_view text);
/// Canonical text, ascending powers, every term written as c*t^k.
std::string format_series(const Series& x);

}  // namespace contraction
