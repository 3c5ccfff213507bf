#include "contraction/classify.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "contraction/error.hpp"

namespace contraction {

namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

BigInt power(std::int64_t p, std::int64_t e) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= p;
  return r;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

NuTable primary_decompose(const FiniteAbelianType& f) {
  NuTable table;
  for (std::int64_t order : f.orders) {
    if (order < 2) {
      throw BadParams("cyclic factor order must be >= 2, got " +
                      std::to_string(order));
    }
    for (auto [p, e] : factorize(order)) ++table[{p, e}];
  }
  return table;
}

bool iso_test(const NuTable& a, const NuTable& b) { return a == b; }

NuTable direct_sum(const NuTable& a, const NuTable& b) {
  NuTable out = a;
  for (const auto& [key, nu] : b) out[key] += nu;
  return out;
}

CompositionData composition_data(std::int64_t p, int m) {
  if (!is_prime(p) || m < 1) {
    throw BadParams("composition_data needs a prime p and m >= 1");
  }
  CompositionData out;
  for (int j = m; j >= 0; --j) out.chain.push_back(j);
  out.length = m;
  out.delta = power(p, m);
  return out;
}

CompositionData composition_data(const NuTable& table) {
  CompositionData out;
  for (const auto& [key, nu] : table) {
    auto [p, n] = key;
    if (!is_prime(p) || n < 1 || nu < 0) {
      throw BadParams("NuTable entries need a prime p, n >= 1 and nu >= 0");
    }
    out.length += static_cast<std::int64_t>(n) * nu;
    out.delta *= power(p, static_cast<std::int64_t>(n) * nu);
  }
  return out;
}

int element_order_exponent(const Series& x) {
  if (!x.is_exact()) throw NotExact("element_order needs an exact series");
  const Modulus& ring = x.ring();
  int v = ring.exponent();
  for (Residue c : x.coeffs()) v = std::min(v, ring.valuation(c));
  return ring.exponent() - v;
}

std::int64_t element_order(const Series& x) {
  return power(x.ring().prime(), element_order_exponent(x))
      .convert_to<std::int64_t>();
}

Series theta_x(const Series& x, const Series& z) {
  const int k = element_order_exponent(x);
  if (z.ring().prime() != x.ring().prime() || z.ring().exponent() != k) {
    throw OrderMismatch("theta_x: x has order p^" + std::to_string(k) +
                        " but z is over " + z.ring().to_string());
  }
  Series out = Series::zero(x.ring());
  for (int i = 0; i < static_cast<int>(z.coeffs().size()); ++i) {
    Residue c = z.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0) out = out + int_mul(c, shift(x, z.start() + i));
  }
  if (!z.is_exact()) {
    out = out + Series::unknown_from(x.ring(), z.prec().value() + x.start());
  }
  return out;
}

int stable_subgroup_locate(const Series& x) {
  const int k = element_order_exponent(x);
  const Modulus& ring = x.ring();
  for (Residue c : x.coeffs()) {
    if (ring.valuation(c) < ring.exponent() - k) {
      throw MalformedInput("coefficient outside p^(m-k) Z/p^m");
    }
  }
  return k;
}

bool schur_cohn(const RationalPoly& f) {
  std::vector<Rational> c = f.lower();
  c.push_back(1);
  while (c.size() > 1) {
    const std::size_t d = c.size() - 1;
    const Rational a0 = c[0];
    const Rational ad = c[d];
    if (abs(a0) >= abs(ad)) return false;
    std::vector<Rational> next(d);
    for (std::size_t i = 0; i < d; ++i) {
      next[i] = ad * c[i + 1] - a0 * c[d - 1 - i];
    }
    const Rational lead = next.back();
    for (auto& v : next) v /= lead;
    c = std::move(next);
  }
  return true;
}

bool omega_p_contractive(const RationalPoly& f, std::int64_t p) {
  if (!is_prime(p)) throw BadParams("omega_p_contractive needs a prime");
  for (const Rational& a : f.lower()) {
    if (a != 0 && p_valuation(a, static_cast<long>(p)) < 1) return false;
  }
  return true;
}

std::string Place::to_string() const {
  return prime ? "p:" + std::to_string(*prime) : "inf";
}

Place Place::parse(std::string_view text) {
  if (text == "inf") return infinity();
  if (text.substr(0, 2) == "p:") {
    std::int64_t p = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw SyntaxError("place: expected p:<prime>", 2);
    }
    if (!is_prime(p)) throw BadParams("place: " + std::to_string(p) + " is not prime");
    return at(p);
  }
  throw SyntaxError("place: expected inf | p:<prime>", 0);
}

bool contractive_at(const Place& place, const RationalPoly& f) {
  return place.is_infinite() ? schur_cohn(f) : omega_p_contractive(f, *place.prime);
}

std::string test_name(const Place& place) {
  return place.is_infinite() ? "schur-cohn" : "p-adic-valuation";
}

ContractionSpec canonicalize_spec(const ContractionSpec& spec) {
  auto key = [](const LinearBlock& b) {
    return std::make_tuple(b.place.prime.has_value(), b.place.prime.value_or(0),
                           b.f.degree(), b.f.lower(), b.n);
  };
  std::vector<LinearBlock> blocks;
  for (const auto& b : spec.blocks) {
    if (b.n < 1) throw MalformedInput("block index n must be >= 1");
    if (b.mult < 1) throw MalformedInput("block multiplicity must be >= 1");
    if (!contractive_at(b.place, b.f)) {
      throw NotContractive(b.place.to_string(), b.f.to_string(), test_name(b.place));
    }
    auto same = std::find_if(blocks.begin(), blocks.end(), [&](const LinearBlock& o) {
      return o.place == b.place && o.f == b.f && o.n == b.n;
    });
    if (same != blocks.end()) {
      same->mult += b.mult;
    } else {
      blocks.push_back(b);
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [&](const LinearBlock& l, const LinearBlock& r) { return key(l) < key(r); });

  ContractionSpec out;
  out.blocks = std::move(blocks);
  for (const auto& [k, nu] : spec.torsion) {
    if (!is_prime(k.first) || k.second < 1 || nu < 0) {
      throw MalformedInput("torsion entries need a prime p, n >= 1 and nu >= 0");
    }
    if (nu > 0) out.torsion[k] = nu;
  }
  return out;
}

bool spec_iso_test(const ContractionSpec& a, const ContractionSpec& b) {
  return canonicalize_spec(a) == canonicalize_spec(b);
}

}  // namespace contraction
