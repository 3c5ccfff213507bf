#pragma once

#include <cstdint>
#include <string>

namespace contraction {

/// A residue of Z/p^m, always stored as the least nonnegative representative.
using Residue = std::int64_t;

/// True iff `n` is prime (trial division).
bool is_prime(std::int64_t n);

/// The coefficient ring Z/p^m Z.
///
/// p^m is at most 2^31.
class Modulus {
 public:
  Modulus(std::int64_t p, int m);

  std::int64_t prime() const noexcept { return p_; }
  int exponent() const noexcept { return m_; }
  /// p^m, the number of residues.
  std::int64_t order() const noexcept { return q_; }

  Residue reduce(std::int64_t v) const noexcept {
    Residue r = v % q_;
    return r < 0 ? r + q_ : r;
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue r = a + b;
    return r >= q_ ? r - q_ : r;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    Residue r = a - b;
    return r < 0 ? r + q_ : r;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const noexcept { return (a * b) % q_; }

  /// p-adic valuation of a residue, in [0, m]; the zero residue has valuation m.
  int valuation(Residue r) const noexcept;
  bool is_unit(Residue r) const noexcept { return r % p_ != 0; }

  std::string to_string() const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::int64_t p_;
  int m_;
  std::int64_t q_;
};

/// Throws RingMismatch unless `a == b`.
void require_same_ring(const Modulus& a, const Modulus& b, const char* op);

}  // namespace contraction
