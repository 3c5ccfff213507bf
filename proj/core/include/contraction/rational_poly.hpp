#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace contraction {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// A monic polynomial X^d + a_{d-1} X^{d-1} + ... + a_0 over Q, d >= 1.
class RationalPoly {
 public:
  /// `lower` holds a_0..a_{d-1}. Throws DegreeZero when it is empty.
  explicit RationalPoly(std::vector<Rational> lower);

  /// Parses e.g. "x^2 - 1/2*x + 1/8" (X is accepted for x). Throws
  /// SyntaxError, DegreeZero, or MalformedInput when the leading coefficient
  /// is not 1.
  static RationalPoly parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(lower_.size()); }
  /// a_0..a_{d-1}.
  const std::vector<Rational>& lower() const noexcept { return lower_; }
  /// a_i for 0 <= i <= d, with a_d = 1.
  Rational coeff(int i) const;

  /// Descending powers, e.g. "x^2 - 1/2*x + 1/8".
  std::string to_string() const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  std::vector<Rational> lower_;
};

/// v_p(r) for r != 0.
int p_valuation(const Rational& r, long p);

}  // namespace contraction
