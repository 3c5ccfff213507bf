#include "contraction/cocycle.hpp"

#include <algorithm>
#include <limits>

#include "contraction/error.hpp"

namespace contraction {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();
// Hard stop for coefficient scans that are not bounded by an exact input.
// Every scan in this file reaches an undetermined coefficient long before.
constexpr int kScanLimit = 1 << 20;

enum class Blocker { None, Input, Parameter };

struct Coefficient {
  std::optional<Residue> value;  // nullopt: undetermined
  Blocker blocker = Blocker::None;
};

struct ScanResult {
  Series value;
  Blocker blocker = Blocker::None;  // why the scan stopped early
};

// Evaluates coefficients d = lo, lo+1, ... until `zero_from` (everything at or
// above it is known to vanish) or the first undetermined coefficient, which
// becomes the output precision.
template <class F>
ScanResult scan(const Modulus& ring, int lo, std::optional<int> zero_from,
                F&& coeff) {
  std::vector<std::int64_t> out;
  const int limit = zero_from ? *zero_from : lo + kScanLimit;
  for (int d = lo; d < limit; ++d) {
    Coefficient c = coeff(d);
    if (!c.value) {
      return {Series::make(ring, lo, out, Prec::at(d)), c.blocker};
    }
    out.push_back(*c.value);
  }
  if (!zero_from) {
    throw InsufficientPrecision("coefficient scan did not terminate");
  }
  return {Series::make(ring, lo, out, Prec::exact()), Blocker::None};
}

// Accumulates one product term into a coefficient; a term with a factor known
// to vanish is zero even when other factors are unknown.
class TermSum {
 public:
  explicit TermSum(const Modulus& ring) : ring_(ring) {}

  void add(std::optional<Residue> a, std::optional<Residue> b,
           std::optional<Residue> c, Blocker unknown_c = Blocker::Parameter) {
    if ((a && *a == 0) || (b && *b == 0) || (c && *c == 0)) return;
    if (!a || !b) {
      if (blocker_ == Blocker::None) blocker_ = Blocker::Input;
      known_ = false;
      return;
    }
    if (!c) {
      blocker_ = unknown_c;
      known_ = false;
      return;
    }
    acc_ = ring_.add(acc_, ring_.mul(ring_.mul(*a, *b), *c));
  }

  Coefficient result() const {
    if (!known_) return {std::nullopt, blocker_};
    return {acc_, Blocker::None};
  }

 private:
  const Modulus& ring_;
  Residue acc_ = 0;
  bool known_ = true;
  Blocker blocker_ = Blocker::None;
};

int ceil_half(int v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

int lower_valuation(const Series& s) {
  // Zero below start(); a truncated zero has start() == prec().
  return s.start();
}

bool is_unit_up_to_shift(const Series& s) {
  return !s.is_zero_at_precision() && s.ring().is_unit(*s.at(s.start()));
}

}  // namespace

// ---------------------------------------------------------------------------
// BitSeq, ParamSeq

BitSeq::BitSeq(std::vector<std::uint8_t> bits, bool zero_tail)
    : bits_(std::move(bits)), zero_tail_(zero_tail) {
  if (bits_.empty()) throw MalformedInput("bit window must have length >= 1");
  for (auto b : bits_) {
    if (b > 1) throw MalformedInput("bit sequence entries must be 0 or 1");
  }
}

BitSeq BitSeq::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bool zero_tail = false;
  if (text.size() >= 3 && text.substr(text.size() - 3) == "(0)") {
    zero_tail = true;
    text.remove_suffix(3);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw SyntaxError("bits: expected 0 or 1", i);
    }
    bits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  if (bits.empty()) throw SyntaxError("bits: empty bit string", 0);
  return BitSeq(std::move(bits), zero_tail);
}

std::optional<int> BitSeq::at(int n) const noexcept {
  if (n < 1) return std::nullopt;
  if (n > length()) return zero_tail_ ? std::optional<int>(0) : std::nullopt;
  return bits_[static_cast<std::size_t>(n - 1)];
}

std::optional<int> BitSeq::first_set() const noexcept {
  for (int n = 1; n <= length(); ++n) {
    if (*at(n) == 1) return n;
  }
  return std::nullopt;
}

std::string BitSeq::to_string() const {
  std::string out;
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return zero_tail_ ? out + "(0)" : out;
}

ParamSeq::ParamSeq(const Modulus& ring, int lo, int hi,
                   std::map<int, Series> entries, TailBound pos_tail,
                   TailBound neg_tail)
    : ring_(ring),
      lo_(lo),
      hi_(hi),
      pos_tail_(pos_tail),
      neg_tail_(neg_tail) {
  if (lo > hi) throw MalformedInput("parameter window has lo > hi");
  for (auto& [n, s] : entries) {
    if (n < lo || n > hi) {
      throw MalformedInput("parameter entry " + std::to_string(n) +
                           " lies outside the window");
    }
    require_same_ring(ring, s.ring(), "ParamSeq");
    if (!s.is_exact_zero()) entries_.emplace(n, std::move(s));
  }
}

std::optional<Series> ParamSeq::entry(int n) const {
  if (n < lo_ || n > hi_) return std::nullopt;
  auto it = entries_.find(n);
  return it == entries_.end() ? Series::zero(ring_) : it->second;
}

std::optional<std::string> ParamSeq::decay_violation(int from) const {
  // Exponents v with |.| = p^-v; non-increasing |.| means non-decreasing v.
  auto exponent = [](const Series& s) -> std::optional<int> {
    if (s.is_exact_zero()) return kUnbounded;
    return s.valuation();
  };
  std::optional<int> prev_pos;
  std::optional<int> prev_neg;
  for (int n = std::max(from, 0); n <= std::max(hi_, -lo_); ++n) {
    if (auto a = entry(n)) {
      auto v = exponent(*a);
      if (v && prev_pos && *v < *prev_pos) {
        return "|a_" + std::to_string(n) + "| increases";
      }
      if (v) prev_pos = v;
    }
    if (auto a = entry(-n)) {
      auto v = exponent(*a);
      if (v && *v != kUnbounded) *v += n;
      if (v && prev_neg && *v < *prev_neg) {
        return "|t^" + std::to_string(n) + " a_" + std::to_string(-n) +
               "| increases";
      }
      if (v) prev_neg = v;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// CocycleSpec constructors

CocycleSpec CocycleSpec::basis_omega(const Modulus& ring, int n) {
  return CocycleSpec(ring, BasisOmega{n});
}

CocycleSpec CocycleSpec::param_omega(ParamSeq a) {
  Modulus ring = a.ring();
  return CocycleSpec(ring, ParamOmega{std::move(a)});
}

CocycleSpec CocycleSpec::eta(const Modulus& ring, BitSeq s) {
  return CocycleSpec(ring, Eta{std::move(s)});
}

CocycleSpec CocycleSpec::quad_coboundary(const Modulus& ring, QuadTerms terms) {
  for (auto& t : terms) require_same_ring(ring, t.u.ring(), "QuadCoboundary");
  return CocycleSpec(ring, QuadCoboundary{std::move(terms)});
}

CocycleSpec CocycleSpec::transformed(CocycleSpec base, Series a_unit,
                                     Series b_unit, QuadTerms cob) {
  Modulus ring = base.ring();
  require_same_ring(ring, a_unit.ring(), "Transformed");
  require_same_ring(ring, b_unit.ring(), "Transformed");
  for (auto& t : cob) require_same_ring(ring, t.u.ring(), "Transformed");
  if (!is_unit_up_to_shift(a_unit) || !is_unit_up_to_shift(b_unit)) {
    throw MalformedInput(
        "transform factors must be units up to a shift (unit leading "
        "coefficient)");
  }
  return CocycleSpec(ring, Transformed{share(std::move(base)), std::move(a_unit),
                                       std::move(b_unit), std::move(cob)});
}

// ---------------------------------------------------------------------------
// Evaluation

BasisEval eval_basis_omega_checked(int n, const Series& x, const Series& y) {
  require_same_ring(x.ring(), y.ring(), "omega_n");
  const Modulus& ring = x.ring();
  if (x.is_exact_zero() || y.is_exact_zero()) return {Series::zero(ring), false};

  const int lo = std::max(x.start(), y.start() - n);
  std::optional<int> zero_from;
  if (x.is_exact()) zero_from = x.end();
  if (y.is_exact()) {
    zero_from = zero_from ? std::min(*zero_from, y.end() - n) : y.end() - n;
  }
  if (zero_from && *zero_from <= lo) return {Series::zero(ring), false};

  ScanResult r = scan(ring, lo, zero_from, [&](int i) {
    TermSum sum(ring);
    sum.add(x.at(i), y.at(i + n), Residue{1});
    return sum.result();
  });
  bool empty = !r.value.is_exact() && r.value.prec().value() <= lo;
  return {std::move(r.value), empty};
}

Series eval_basis_omega(int n, const Series& x, const Series& y) {
  return eval_basis_omega_checked(n, x, y).value;
}

Series eval_eta(const BitSeq& s, const Series& x, const Series& y) {
  require_same_ring(x.ring(), y.ring(), "eta");
  const Modulus& ring = x.ring();
  if (x.is_exact_zero() || y.is_exact_zero()) return Series::zero(ring);

  const int xs = x.start();
  const int ys = y.start();
  // Smallest d with a nonempty range n in [max(1, ys - d), d - xs].
  const int lo = std::max(xs + 1, ceil_half(xs + ys));
  std::optional<int> zero_from;
  if (y.is_exact()) zero_from = y.end() - 1;
  if (x.is_exact() && y.is_exact()) {
    zero_from = std::min(*zero_from, (x.end() + y.end() - 2) / 2 + 1);
  }
  if (x.is_exact() && s.zero_tail()) {
    // d - n <= end(x) - 1 with n <= L.
    const int bound = x.end() + s.length();
    zero_from = zero_from ? std::min(*zero_from, bound) : bound;
  }
  if (zero_from && *zero_from <= lo) return Series::zero(ring);

  auto coefficient = [&](int d) {
    int n_lo = std::max(1, ys - d);
    int n_hi = d - xs;
    if (x.is_exact()) n_lo = std::max(n_lo, d - x.end() + 1);
    if (y.is_exact()) n_hi = std::min(n_hi, y.end() - 1 - d);
    TermSum sum(ring);
    for (int n = n_lo; n <= n_hi; ++n) {
      auto bit = s.at(n);
      sum.add(x.at(d - n), y.at(d + n),
              bit ? std::optional<Residue>(*bit) : std::nullopt);
    }
    return sum.result();
  };

  ScanResult r = scan(ring, lo, zero_from, coefficient);
  if (!r.value.is_exact() && r.value.prec().value() <= lo &&
      r.blocker == Blocker::Parameter) {
    throw WindowTooSmall("eta: bit window of length " +
                             std::to_string(s.length()) +
                             " cannot determine any coefficient",
                         std::max(1, ys - lo), lo - xs);
  }
  return std::move(r.value);
}

Series eval_param_omega(const ParamSeq& a, const Series& x, const Series& y) {
  require_same_ring(a.ring(), x.ring(), "omega_a");
  require_same_ring(x.ring(), y.ring(), "omega_a");
  const Modulus& ring = x.ring();
  if (x.is_exact_zero() || y.is_exact_zero()) return Series::zero(ring);

  // omega_n(x, y) can only be nonzero for n = j - i with x_i, y_j not known to
  // vanish.
  const long n_lo = x.is_exact() ? long{y.start()} - (x.end() - 1)
                                 : std::numeric_limits<int>::min();
  const long n_hi = y.is_exact() ? long{y.end() - 1} - x.start()
                                 : std::numeric_limits<int>::max();

  Series out = Series::zero(ring);
  for (long n = std::max<long>(a.lo(), n_lo); n <= std::min<long>(a.hi(), n_hi);
       ++n) {
    Series an = *a.entry(static_cast<int>(n));
    if (an.is_exact_zero()) continue;
    out = add(out, ring_mul(an, eval_basis_omega(static_cast<int>(n), x, y)));
  }

  auto tail_contributes = [&](long from, long to) {
    if (from > to) return false;
    if (from == std::numeric_limits<int>::min() ||
        to == std::numeric_limits<int>::max()) {
      return true;
    }
    for (long n = from; n <= to; ++n) {
      if (!eval_basis_omega(static_cast<int>(n), x, y).is_exact_zero()) {
        return true;
      }
    }
    return false;
  };

  if (n_hi > a.hi() && tail_contributes(a.hi() + 1L, n_hi)) {
    switch (a.pos_tail().kind) {
      case TailBound::Kind::Zero:
        break;
      case TailBound::Kind::Floor:
        out = truncate(out, a.pos_tail().floor + x.start());
        break;
      case TailBound::Kind::Unknown:
        throw WindowTooSmall("omega_a: entries beyond the window contribute",
                             std::max<long>(n_lo, a.lo()), n_hi);
    }
  }
  if (n_lo < a.lo() && tail_contributes(n_lo, a.lo() - 1L)) {
    switch (a.neg_tail().kind) {
      case TailBound::Kind::Zero:
        break;
      case TailBound::Kind::Floor:
        out = truncate(out, a.neg_tail().floor + y.start());
        break;
      case TailBound::Kind::Unknown:
        throw WindowTooSmall("omega_a: entries below the window contribute",
                             n_lo, std::min<long>(n_hi, a.hi()));
    }
  }
  return out;
}

Series eval_quadratic(const QuadTerms& terms, const Series& x) {
  Series out = Series::zero(x.ring());
  for (const auto& [k, u] : terms) {
    require_same_ring(x.ring(), u.ring(), "quadratic map");
    out = add(out, ring_mul(u, eval_basis_omega(k, x, x)));
  }
  return out;
}

Series eval_coboundary(const QuadTerms& terms, const Series& x, const Series& y) {
  require_same_ring(x.ring(), y.ring(), "coboundary");
  return eval_quadratic(terms, x) + eval_quadratic(terms, y) -
         eval_quadratic(terms, x + y);
}

Series eval_coboundary_bilinear(const QuadTerms& terms, const Series& x,
                                const Series& y) {
  require_same_ring(x.ring(), y.ring(), "coboundary");
  Series out = Series::zero(x.ring());
  for (const auto& [k, u] : terms) {
    Series sym = eval_basis_omega(k, x, y) + eval_basis_omega(k, y, x);
    out = out - ring_mul(u, sym);
  }
  return out;
}

QuadTerms negate_terms(const QuadTerms& terms) {
  QuadTerms out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back({t.k, negate(t.u)});
  return out;
}

Series eval(const CocycleSpec& spec, const Series& x, const Series& y) {
  require_same_ring(spec.ring(), x.ring(), "eval");
  require_same_ring(spec.ring(), y.ring(), "eval");
  return std::visit(
      [&](const auto& v) -> Series {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CocycleSpec::BasisOmega>) {
          return eval_basis_omega(v.n, x, y);
        } else if constexpr (std::is_same_v<T, CocycleSpec::ParamOmega>) {
          return eval_param_omega(v.a, x, y);
        } else if constexpr (std::is_same_v<T, CocycleSpec::Eta>) {
          return eval_eta(v.s, x, y);
        } else if constexpr (std::is_same_v<T, CocycleSpec::QuadCoboundary>) {
          return eval_coboundary(v.terms, x, y);
        } else {
          Series inner =
              eval(*v.base, ring_mul(v.b_unit, x), ring_mul(v.b_unit, y));
          Series out = ring_mul(v.a_unit, inner);
          if (!v.cob.empty()) out = out + eval_coboundary(v.cob, x, y);
          return out;
        }
      },
      spec.variant());
}

ParamSeq b_map(const CocycleSpec& spec, int lo, int hi) {
  const Modulus& ring = spec.ring();
  std::map<int, Series> entries;
  const Series one = Series::monomial(ring, 1, 0);
  for (int m = lo; m <= hi; ++m) {
    Series v = eval(spec, one, Series::monomial(ring, 1, m));
    if (!v.is_exact() && v.prec().value() <= v.start()) {
      throw WindowTooSmall("b_map: omega(t^0, t^" + std::to_string(m) +
                               ") has no determined coefficient",
                           m, m);
    }
    entries.emplace(m, std::move(v));
  }
  return ParamSeq(ring, lo, hi, std::move(entries), TailBound::unknown(),
                  TailBound::unknown());
}

Series antisymmetrize(const CocycleSpec& spec, const Series& x, const Series& y) {
  return eval(spec, x, y) - eval(spec, y, x);
}

std::optional<int> ball_image_floor(const CocycleSpec& spec) {
  auto quad_floor = [](const QuadTerms& terms) {
    int f = kUnbounded;
    for (const auto& [k, u] : terms) {
      if (u.is_exact_zero()) continue;
      f = std::min(f, lower_valuation(u) + std::max(0, -k));
    }
    return f;
  };
  return std::visit(
      [&](const auto& v) -> std::optional<int> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CocycleSpec::BasisOmega>) {
          return std::max(0, -v.n);
        } else if constexpr (std::is_same_v<T, CocycleSpec::ParamOmega>) {
          int f = kUnbounded;
          for (const auto& [n, an] : v.a.entries()) {
            f = std::min(f, lower_valuation(an) + std::max(0, -n));
          }
          for (const TailBound* t : {&v.a.pos_tail(), &v.a.neg_tail()}) {
            if (t->kind == TailBound::Kind::Unknown) return std::nullopt;
            if (t->kind == TailBound::Kind::Floor) f = std::min(f, t->floor);
          }
          return f;
        } else if constexpr (std::is_same_v<T, CocycleSpec::Eta>) {
          return 1;
        } else if constexpr (std::is_same_v<T, CocycleSpec::QuadCoboundary>) {
          return quad_floor(v.terms);
        } else {
          auto base = ball_image_floor(*v.base);
          if (!base) return std::nullopt;
          int f = kUnbounded;
          if (*base != kUnbounded) {
            f = *base + lower_valuation(v.a_unit) + lower_valuation(v.b_unit);
          }
          return std::min(f, quad_floor(v.cob));
        }
      },
      spec.variant());
}

}  // namespace contraction
