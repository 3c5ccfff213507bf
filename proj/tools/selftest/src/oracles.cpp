#include "contraction/oracles.hpp"

#include <cmath>
#include <map>

#include <Eigen/Dense>

namespace contraction::oracle {

std::vector<double> root_moduli(const RationalPoly& f) {
  const int d = f.degree();
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Mat c = Mat::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0L;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -f.coeff(i).convert_to<long double>();
  Eigen::EigenSolver<Mat> solver(c, false);
  std::vector<double> out;
  for (int i = 0; i < d; ++i) {
    out.push_back(static_cast<double>(std::abs(solver.eigenvalues()[i])));
  }
  return out;
}

std::optional<bool> roots_inside_unit_circle(const RationalPoly& f,
                                             double margin) {
  bool inside = true;
  for (double r : root_moduli(f)) {
    if (std::abs(r - 1.0) <= margin) return std::nullopt;
    if (r > 1.0) inside = false;
  }
  return inside;
}

bool companion_nilpotent_mod(const std::vector<std::int64_t>& lower,
                             std::int64_t p) {
  const auto d = static_cast<Eigen::Index>(lower.size());
  using Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  auto mod = [p](std::int64_t v) { return ((v % p) + p) % p; };
  Mat c = Mat::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (Eigen::Index i = 0; i < d; ++i) c(i, d - 1) = mod(-lower[static_cast<std::size_t>(i)]);
  Mat power = Mat::Identity(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    power = (power * c).unaryExpr(mod);
  }
  return power.isZero();
}

namespace {

std::map<int, std::int64_t> support(const Series& x) {
  std::map<int, std::int64_t> out;
  for (int i = x.start(); i < x.end(); ++i) {
    if (auto v = x.at(i); v && *v != 0) out[i] = *v;
  }
  return out;
}

Series from_map(const Modulus& ring, const std::map<int, std::int64_t>& c) {
  Series out = Series::zero(ring);
  for (const auto& [k, v] : c) {
    out = out + Series::monomial(ring, ring.reduce(v), k);
  }
  return out;
}

}  // namespace

Series omega_direct(int n, const Series& x, const Series& y) {
  const Modulus& ring = x.ring();
  auto xs = support(x), ys = support(y);
  std::map<int, std::int64_t> c;
  for (const auto& [i, xi] : xs) {
    auto it = ys.find(i + n);
    if (it != ys.end()) c[i] = (c[i] + xi * it->second) % ring.order();
  }
  return from_map(ring, c);
}

Series eta_direct(const BitSeq& s, const Series& x, const Series& y) {
  const Modulus& ring = x.ring();
  auto xs = support(x), ys = support(y);
  std::map<int, std::int64_t> c;
  for (const auto& [i, xi] : xs) {
    for (const auto& [j, yj] : ys) {
      // d - n = i and d + n = j.
      if ((j - i) % 2 != 0) continue;
      const int n = (j - i) / 2;
      if (n < 1 || n > s.length() || *s.at(n) == 0) continue;
      const int d = i + n;
      c[d] = (c[d] + xi * yj) % ring.order();
    }
  }
  return from_map(ring, c);
}

std::int64_t additive_order(const Series& x) {
  Series acc = x;
  std::int64_t j = 1;
  while (!acc.is_exact_zero()) {
    acc = acc + x;
    ++j;
  }
  return j;
}

}  // namespace contraction::oracle
