#include "contraction/series.hpp"

#include <algorithm>

#include "contraction/error.hpp"

namespace contraction {

namespace {

// Collects f(i) for i in [lo, hi) into a canonical series.
template <class F>
Series tabulate(const Modulus& ring, int lo, int hi, Prec prec, F&& f) {
  if (!prec.is_exact()) {
    hi = prec.value();
    lo = std::min(lo, hi);
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(std::max(0, hi - lo)));
  for (int i = lo; i < hi; ++i) out.push_back(f(i));
  return Series::make(ring, lo, out, prec);
}

}  // namespace

std::string AbsValue::to_string(std::int64_t p) const {
  if (!exponent) return "0";
  std::string mag = std::to_string(p) + "^" + std::to_string(-*exponent);
  return is_exact() ? mag : "<= " + mag;
}

Series Series::make(const Modulus& ring, int start,
                    const std::vector<std::int64_t>& coeffs, Prec prec) {
  const int n = static_cast<int>(coeffs.size());
  if (!prec.is_exact() && prec.value() < start + n) {
    throw MalformedInput("precision " + std::to_string(prec.value()) +
                         " is below start + length = " +
                         std::to_string(start + n));
  }
  std::vector<Residue> reduced;
  reduced.reserve(coeffs.size());
  for (auto c : coeffs) reduced.push_back(ring.reduce(c));
  if (!prec.is_exact()) reduced.resize(prec.value() - start, 0);

  auto first = std::find_if(reduced.begin(), reduced.end(),
                            [](Residue r) { return r != 0; });
  int lead = static_cast<int>(first - reduced.begin());
  if (first == reduced.end()) {
    int s = prec.is_exact() ? 0 : prec.value();
    return Series(ring, s, {}, prec);
  }
  auto last = reduced.end();
  if (prec.is_exact()) {
    while (*(last - 1) == 0) --last;
  }
  return Series(ring, start + lead, std::vector<Residue>(first, last), prec);
}

std::optional<Residue> Series::at(int i) const noexcept {
  if (i < start_) return Residue{0};
  if (!prec_.is_exact() && i >= prec_.value()) return std::nullopt;
  if (i >= end()) return Residue{0};
  return coeffs_[static_cast<std::size_t>(i - start_)];
}

std::optional<int> Series::valuation() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return start_;
}

AbsValue Series::abs() const {
  if (!coeffs_.empty()) return AbsValue::exact(start_);
  if (is_exact()) return AbsValue::zero();
  return AbsValue::upper_bound(prec_.value());
}

Series add(const Series& x, const Series& y) {
  require_same_ring(x.ring(), y.ring(), "add");
  const Modulus& r = x.ring();
  return tabulate(r, std::min(x.start(), y.start()), std::max(x.end(), y.end()),
                  min(x.prec(), y.prec()),
                  [&](int i) { return r.add(*x.at(i), *y.at(i)); });
}

Series sub(const Series& x, const Series& y) {
  require_same_ring(x.ring(), y.ring(), "sub");
  const Modulus& r = x.ring();
  return tabulate(r, std::min(x.start(), y.start()), std::max(x.end(), y.end()),
                  min(x.prec(), y.prec()),
                  [&](int i) { return r.sub(*x.at(i), *y.at(i)); });
}

Series negate(const Series& x) {
  const Modulus& r = x.ring();
  return tabulate(r, x.start(), x.end(), x.prec(),
                  [&](int i) { return r.neg(*x.at(i)); });
}

Series int_mul(std::int64_t k, const Series& x) {
  const Modulus& r = x.ring();
  const Residue kk = r.reduce(k);
  return tabulate(r, x.start(), x.end(), x.prec(),
                  [&](int i) { return r.mul(kk, *x.at(i)); });
}

Series shift(const Series& x, int k) {
  if (x.is_exact_zero()) return x;
  std::vector<std::int64_t> c(x.coeffs().begin(), x.coeffs().end());
  return Series::make(x.ring(), x.start() + k, c, x.prec().shifted(k));
}

Series ring_mul(const Series& x, const Series& y) {
  require_same_ring(x.ring(), y.ring(), "ring_mul");
  const Modulus& r = x.ring();
  if (x.is_exact_zero() || y.is_exact_zero()) return Series::zero(r);
  Prec prec = min(x.prec().shifted(y.start()), y.prec().shifted(x.start()));
  const int lo = x.start() + y.start();
  const int hi = x.end() + y.end();
  return tabulate(r, lo, hi, prec, [&](int d) {
    Residue acc = 0;
    // i runs over stored indices of x with d - i inside y's stored window.
    const int i_lo = std::max(x.start(), d - y.end() + 1);
    const int i_hi = std::min(x.end() - 1, d - y.start());
    for (int i = i_lo; i <= i_hi; ++i) {
      acc = r.add(acc, r.mul(*x.at(i), *y.at(d - i)));
    }
    return acc;
  });
}

Series truncate(const Series& x, int p) {
  Prec prec = min(x.prec(), Prec::at(p));
  if (prec == x.prec()) return x;
  return tabulate(x.ring(), x.start(), x.end(), prec,
                  [&](int i) { return *x.at(i); });
}

Series reduce_to(const Series& x, const Modulus& target) {
  if (target.prime() != x.ring().prime() ||
      target.exponent() > x.ring().exponent()) {
    throw RingMismatch("reduce_to: cannot reduce " + x.ring().to_string() +
                       " to " + target.to_string());
  }
  return tabulate(target, x.start(), x.end(), x.prec(),
                  [&](int i) { return target.reduce(*x.at(i)); });
}

Series lift_to(const Series& x, const Modulus& target) {
  if (target.prime() != x.ring().prime() ||
      target.exponent() < x.ring().exponent()) {
    throw RingMismatch("lift_to: cannot lift " + x.ring().to_string() +
                       " to " + target.to_string());
  }
  return tabulate(target, x.start(), x.end(), x.prec(),
                  [&](int i) { return *x.at(i); });
}

bool agree(const Series& x, const Series& y) {
  return sub(x, y).is_zero_at_precision();
}

}  // namespace contraction
