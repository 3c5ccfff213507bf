#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "contraction/series.hpp"

namespace contraction {

/// A finite window s_1..s_L of a 0/1 sequence. Bits beyond L are unknown
/// unless the sequence is declared to vanish there.
class BitSeq {
 public:
  explicit BitSeq(std::vector<std::uint8_t> bits, bool zero_tail = false);
  /// "1101" -> s_1 = 1, s_2 = 1, s_3 = 0, s_4 = 1, unknown beyond.
  /// "1101(0)" -> the same window followed by zeros.
  static BitSeq parse(std::string_view text);

  int length() const noexcept { return static_cast<int>(bits_.size()); }
  bool zero_tail() const noexcept { return zero_tail_; }
  /// s_n for n >= 1; nullopt beyond the window unless the tail is zero.
  std::optional<int> at(int n) const noexcept;
  /// n0: the index of the first set bit, if any within the window.
  std::optional<int> first_set() const noexcept;
  bool zero_on_window() const noexcept { return !first_set(); }
  std::string to_string() const;

  friend bool operator==(const BitSeq&, const BitSeq&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  bool zero_tail_ = false;
};

/// What is known about a two-sided sequence (a_n) outside its stored window.
struct TailBound {
  enum class Kind {
    Zero,     ///< a_n = 0 outside the window
    Floor,    ///< a valuation floor, see ParamSeq
    Unknown,  ///< nothing is known
  };
  Kind kind = Kind::Zero;
  int floor = 0;

  static TailBound zero() { return {Kind::Zero, 0}; }
  static TailBound unknown() { return {Kind::Unknown, 0}; }
  static TailBound at_least(int v) { return {Kind::Floor, v}; }

  friend bool operator==(const TailBound&, const TailBound&) = default;
};

/// A window [lo, hi] of a sequence a = (a_n) in the space B of sequences with
/// a_n -> 0 and t^n a_{-n} -> 0.
///
/// Entries missing inside the window are zero. Outside the window the
/// positive tail obeys val(a_n) >= pos_tail.floor for n > hi, and the negative
/// tail obeys val(t^k a_{-k}) >= neg_tail.floor for -k < lo, when declared as
/// floors. Membership in B is asymptotic and remains the caller's obligation;
/// `decay_violation` only inspects the stored window.
class ParamSeq {
 public:
  ParamSeq(const Modulus& ring, int lo, int hi, std::map<int, Series> entries,
           TailBound pos_tail = TailBound::zero(),
           TailBound neg_tail = TailBound::zero());

  const Modulus& ring() const noexcept { return ring_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  const std::map<int, Series>& entries() const noexcept { return entries_; }
  const TailBound& pos_tail() const noexcept { return pos_tail_; }
  const TailBound& neg_tail() const noexcept { return neg_tail_; }

  /// a_n inside the window (zero if not stored); nullopt outside.
  std::optional<Series> entry(int n) const;

  /// Checks on the window that |a_n| and |t^n a_{-n}| are non-increasing for
  /// n >= from. Returns a description of the first violation.
  std::optional<std::string> decay_violation(int from) const;

  friend bool operator==(const ParamSeq&, const ParamSeq&) = default;

 private:
  Modulus ring_;
  int lo_;
  int hi_;
  std::map<int, Series> entries_;
  TailBound pos_tail_;
  TailBound neg_tail_;
};

/// One summand u_k * omega_k(x, x) of a quadratic map f.
struct QuadTerm {
  int k;
  Series u;
  friend bool operator==(const QuadTerm&, const QuadTerm&) = default;
};
using QuadTerms = std::vector<QuadTerm>;

/// A closed description of a continuous, equivariant, biadditive 2-cocycle
/// A x A -> A (or of a transform of one).
class CocycleSpec {
 public:
  struct BasisOmega {
    int n;
    friend bool operator==(const BasisOmega&, const BasisOmega&) = default;
  };
  struct ParamOmega {
    ParamSeq a;
    friend bool operator==(const ParamOmega&, const ParamOmega&) = default;
  };
  struct Eta {
    BitSeq s;
    friend bool operator==(const Eta&, const Eta&) = default;
  };
  /// The coboundary of f(x) = sum_k u_k omega_k(x, x).
  struct QuadCoboundary {
    QuadTerms terms;
    friend bool operator==(const QuadCoboundary&, const QuadCoboundary&) = default;
  };
  /// (x, y) -> a * base(b x, b y) + cob(x, y).
  struct Transformed {
    std::shared_ptr<const CocycleSpec> base;
    Series a_unit;
    Series b_unit;
    QuadTerms cob;
    friend bool operator==(const Transformed& l, const Transformed& r) {
      return *l.base == *r.base && l.a_unit == r.a_unit &&
             l.b_unit == r.b_unit && l.cob == r.cob;
    }
  };
  using Variant =
      std::variant<BasisOmega, ParamOmega, Eta, QuadCoboundary, Transformed>;

  static CocycleSpec basis_omega(const Modulus& ring, int n);
  static CocycleSpec param_omega(ParamSeq a);
  static CocycleSpec eta(const Modulus& ring, BitSeq s);
  static CocycleSpec quad_coboundary(const Modulus& ring, QuadTerms terms);
  /// Throws MalformedInput unless a_unit and b_unit are units up to a shift
  /// (nonzero with unit leading coefficient).
  static CocycleSpec transformed(CocycleSpec base, Series a_unit, Series b_unit,
                                 QuadTerms cob = {});

  const Modulus& ring() const noexcept { return ring_; }
  const Variant& variant() const noexcept { return v_; }

  friend bool operator==(const CocycleSpec&, const CocycleSpec&) = default;

 private:
  CocycleSpec(const Modulus& ring, Variant v) : ring_(ring), v_(std::move(v)) {}

  Modulus ring_;
  Variant v_;
};

using SpecRef = std::shared_ptr<const CocycleSpec>;

inline SpecRef share(CocycleSpec spec) {
  return std::make_shared<const CocycleSpec>(std::move(spec));
}

/// omega_n(x, y) = sum_i x_i y_{i+n} t^i, with the flag set when not a single
/// output coefficient can be determined.
struct BasisEval {
  Series value;
  bool empty_window = false;
};

BasisEval eval_basis_omega_checked(int n, const Series& x, const Series& y);
Series eval_basis_omega(int n, const Series& x, const Series& y);
/// sum_n a_n omega_n(x, y). Throws WindowTooSmall when an unknown part of the
/// sequence could contribute to every output coefficient.
Series eval_param_omega(const ParamSeq& a, const Series& x, const Series& y);
/// eta_s(x, y) = sum_n s_n t^n omega_{2n}(x, y), i.e. the coefficient at d is
/// sum_n s_n x_{d-n} y_{d+n}. Unknown bits limit the output precision; throws
/// WindowTooSmall if no coefficient can be determined.
Series eval_eta(const BitSeq& s, const Series& x, const Series& y);
/// f(x) + f(y) - f(x + y) for f(x) = sum_k u_k omega_k(x, x).
Series eval_coboundary(const QuadTerms& terms, const Series& x, const Series& y);
/// The same value through the bilinear expansion
/// -sum_k u_k (omega_k(x, y) + omega_k(y, x)).
Series eval_coboundary_bilinear(const QuadTerms& terms, const Series& x,
                                const Series& y);
/// f(x) = sum_k u_k omega_k(x, x).
Series eval_quadratic(const QuadTerms& terms, const Series& x);
QuadTerms negate_terms(const QuadTerms& terms);

Series eval(const CocycleSpec& spec, const Series& x, const Series& y);

/// b_m(omega) = omega(t^0, t^m) for m in [lo, hi]. The returned tails are
/// unknown.
ParamSeq b_map(const CocycleSpec& spec, int lo, int hi);

/// omega(x, y) - omega(y, x).
Series antisymmetrize(const CocycleSpec& spec, const Series& x, const Series& y);

/// A lower bound on val(omega(x, y)) over x, y in F[[t]], or nullopt when no
/// bound follows from the description (unknown sequence tails).
std::optional<int> ball_image_floor(const CocycleSpec& spec);

/// Text form: omega:<n> | eta:<bits>[(0)] | param:@<file> | cob:<k>:<series>[,...]
/// | xform(<spec>;a=<series>;b=<series>[;cob=<k>:<series>[,...]]).
/// `load_file` resolves param:@file payloads (JSON, see read_param_seq_json).
CocycleSpec parse_spec(
    const Modulus& ring, std::string_view text,
    const std::function<std::string(const std::string&)>& load_file = {});
/// Inverse of parse_spec, except that ParamOmega prints as param:<inline>.
std::string format_spec(const CocycleSpec& spec);

}  // namespace contraction
