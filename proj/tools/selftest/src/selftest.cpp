#include "contraction/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "contraction/checks.hpp"
#include "contraction/classify.hpp"
#include "contraction/error.hpp"
#include "contraction/extension.hpp"
#include "contraction/fingerprint.hpp"
#include "contraction/oracles.hpp"
#include "contraction/sampling.hpp"
#include "contraction/section.hpp"

namespace contraction::selftest {

namespace {

struct Tally {
  std::size_t checked = 0;
  std::string first;

  template <class F>
  void expect(bool ok, F&& what) {
    ++checked;
    if (!ok && first.empty()) first = what();
  }

  void absorb(const CheckReport& r, const std::string& context) {
    checked += r.checked;
    if (!r.passed() && first.empty()) {
      std::string inputs;
      if (!r.witnesses.empty()) {
        for (const auto& in : r.witnesses[0].inputs) inputs += " [" + in + "]";
        first = context + ":" + inputs + " gives " + r.witnesses[0].lhs +
                " vs " + r.witnesses[0].rhs;
      } else {
        first = context + ": " + std::to_string(r.failed) + " failures";
      }
    }
  }

  CriterionResult result(int id, std::string name) const {
    return {id, std::move(name), first.empty() && checked > 0, checked, first};
  }
};

const std::int64_t kPrimes[] = {2, 3, 5};

BitSeq zero_tail_bits(Rng& rng, int length, bool nonzero = false) {
  return BitSeq::parse(random_bits(rng, length, nonzero).to_string() + "(0)");
}

Series unit_at(Rng& rng, const Modulus& ring, int lo, int hi) {
  return random_unit(rng, ring, static_cast<int>(rng.between(lo, hi)), 3);
}

Series short_series(Rng& rng, const Modulus& ring, int span) {
  int lo = static_cast<int>(rng.between(-3, 3));
  return random_series(rng, ring, lo, lo + static_cast<int>(rng.between(0, span)));
}

// 0 basis omega, 1 parametrized, 2 eta, 3 quadratic coboundary, 4 transform.
CocycleSpec random_spec(Rng& rng, const Modulus& ring, int variant) {
  switch (variant) {
    case 0:
      return CocycleSpec::basis_omega(ring, static_cast<int>(rng.between(-4, 4)));
    case 1:
      return CocycleSpec::param_omega(random_param_seq(rng, ring, -6, 6));
    case 2:
      return CocycleSpec::eta(ring, zero_tail_bits(rng, 8));
    case 3:
      return CocycleSpec::quad_coboundary(ring, random_quad_terms(rng, ring, 3, -3, 3));
    default:
      return CocycleSpec::transformed(CocycleSpec::eta(ring, zero_tail_bits(rng, 8)),
                                      unit_at(rng, ring, -2, 2),
                                      unit_at(rng, ring, -2, 2),
                                      random_quad_terms(rng, ring, 3, -3, 3));
  }
}

CriterionResult cocycle_laws(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (std::int64_t p : kPrimes) {
    Modulus ring(p, 1);
    for (int variant = 0; variant < 5; ++variant) {
      for (int batch = 0; batch < 10; ++batch) {
        CocycleSpec spec = random_spec(rng, ring, variant);
        std::vector<Triple> triples;
        std::vector<Pair> pairs;
        for (int i = 0; i < 100; ++i) {
          Series x = short_series(rng, ring, 6);
          Series y = short_series(rng, ring, 6);
          Series z = short_series(rng, ring, 6);
          triples.push_back({x, y, z});
          pairs.push_back({x, y});
        }
        t.absorb(check_cocycle_identity(spec, triples), format_spec(spec));
        t.absorb(check_equivariance(spec, pairs, -3, 3), format_spec(spec));
      }
    }
  }
  return t.result(1, "cocycle identity and equivariance");
}

CriterionResult ultrametric_bounds(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    Modulus ring(kPrimes[i % 3], 1);
    int n = static_cast<int>(rng.between(-6, 6));
    Series x = short_series(rng, ring, 6), y = short_series(rng, ring, 6);
    Series w = eval_basis_omega(n, x, y);
    auto where = [&] {
      return "omega_" + std::to_string(n) + "(" + format_series(x) + ", " +
             format_series(y) + ") = " + format_series(w);
    };
    t.expect(w == oracle::omega_direct(n, x, y), where);
    t.expect(w.is_exact_zero() || (!x.is_exact_zero() && w.start() >= x.start()), where);
  }
  for (int i = 0; i < 1000; ++i) {
    Modulus ring(kPrimes[i % 3], 1);
    BitSeq bits = random_bits(rng, 12);
    BitSeq closed = BitSeq::parse(bits.to_string() + "(0)");
    // Half the draws leave the bits beyond the window unknown.
    BitSeq s = i % 2 == 0 ? closed : bits;
    Series x = short_series(rng, ring, 4), y = short_series(rng, ring, 4);
    Series e = eval_eta(s, x, y);
    auto where = [&] {
      return "eta_" + s.to_string() + "(" + format_series(x) + ", " +
             format_series(y) + ") = " + format_series(e);
    };
    t.expect(agree(e, oracle::eta_direct(closed, x, y)), where);
    if (s.zero_tail()) t.expect(e.is_exact(), where);
    if (e.is_exact_zero()) continue;
    auto n0 = s.first_set();
    // With s vanishing on its window only the unknown tail can contribute.
    int bound = x.start() + (n0 ? *n0 : s.length() + 1);
    t.expect(!x.is_exact_zero() && e.start() >= bound, where);
  }
  return t.result(2, "ultrametric bounds");
}

CriterionResult b_map_window(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    Modulus ring(kPrimes[i % 3], 1);
    ParamSeq a = random_param_seq(rng, ring, -8, 8);
    ParamSeq b = b_map(CocycleSpec::param_omega(a), -8, 8);
    for (int n = -8; n <= 8; ++n) {
      t.expect(b.entry(n) == a.entry(n), [&] {
        return "b_map(omega_a) at n = " + std::to_string(n) + " for " +
               format_spec(CocycleSpec::param_omega(a));
      });
    }
  }
  for (std::int64_t p : kPrimes) {
    Modulus ring(p, 1);
    for (int variant = 0; variant < 5; ++variant) {
      for (int draw = 0; draw < 4; ++draw) {
        CocycleSpec spec = random_spec(rng, ring, variant);
        ParamSeq b = b_map(spec, -8, 8);
        for (int m = -8; m <= 8; ++m) {
          Series x = Series::monomial(ring, 1, 0), y = Series::monomial(ring, 1, m);
          Series lhs = eval_param_omega(b, x, y), rhs = eval(spec, x, y);
          t.expect(lhs == rhs, [&] {
            return format_spec(spec) + " at (t^0, t^" + std::to_string(m) +
                   "): " + format_series(lhs) + " vs " + format_series(rhs);
          });
        }
      }
    }
  }
  return t.result(3, "b-map window");
}

ExtElement random_element(Rng& rng, const SpecRef& spec) {
  return ExtElement(short_series(rng, spec->ring(), 6),
                    short_series(rng, spec->ring(), 6), spec);
}

CriterionResult extension_axioms(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  std::vector<ExtTriple> nil;
  for (int i = 0; i < 10; ++i) {
    Modulus ring(kPrimes[i % 2], 1);
    SpecRef spec = share(CocycleSpec::eta(ring, zero_tail_bits(rng, 8)));
    ExtElement e = ext_identity(spec);
    for (int j = 0; j < 50; ++j) {
      ExtElement u = random_element(rng, spec), v = random_element(rng, spec),
                 w = random_element(rng, spec);
      auto where = [&] {
        return format_spec(*spec) + " at " + format_ext_element(u) + ", " +
               format_ext_element(v) + ", " + format_ext_element(w);
      };
      t.expect(ext_mul(ext_mul(u, v), w) == ext_mul(u, ext_mul(v, w)), where);
      t.expect(ext_mul(e, u) == u && ext_mul(u, e) == u, where);
      t.expect(ext_mul(u, ext_inv(u)) == e && ext_mul(ext_inv(u), u) == e, where);
      t.expect(commutator(u, v).g().is_exact_zero(), where);
      if (j < 20) nil.push_back({u, v, w});
    }
  }
  t.absorb(nilpotency_probe(nil), "nilpotency");
  return t.result(4, "extension group axioms");
}

CriterionResult center_dichotomy(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  std::vector<int> all_probes;
  for (int j = -6; j <= 12; ++j) all_probes.push_back(j);
  auto central_for_zero_g = [&](const SpecRef& spec) {
    for (int j = 0; j < 5; ++j) {
      ExtElement u(short_series(rng, spec->ring(), 6), Series::zero(spec->ring()), spec);
      t.expect(center_test(u, all_probes).central,
               [&] { return format_ext_element(u) + " is not central"; });
    }
  };
  for (int i = 0; i < 20; ++i) {
    Modulus ring(kPrimes[i % 3], 1);
    SpecRef spec = share(CocycleSpec::eta(ring, random_bits(rng, 8, true)));
    const int n0 = *std::get<CocycleSpec::Eta>(spec->variant()).s.first_set();
    for (int j = 0; j < 10; ++j) {
      ExtElement u(short_series(rng, ring, 6), unit_at(rng, ring, -3, 3), spec);
      const int degree = 2 * n0 + *u.g().valuation();
      CenterVerdict v = center_test(u, {degree});
      t.expect(!v.central && v.probe == degree && v.witness &&
                   !v.witness->is_zero_at_precision() &&
                   center_witness_degree(u) == degree,
               [&] {
                 return format_spec(*spec) + ": no witness at t^" +
                        std::to_string(degree) + " for " + format_ext_element(u);
               });
    }
    central_for_zero_g(spec);
  }
  for (std::int64_t p : kPrimes) {
    Modulus ring(p, 1);
    SpecRef zero = share(CocycleSpec::eta(ring, BitSeq::parse("0(0)")));
    for (int j = 0; j < 10; ++j) {
      ExtElement u = random_element(rng, zero);
      t.expect(center_test(u, all_probes).central,
               [&] { return format_ext_element(u) + " is not central for s = 0"; });
    }
    central_for_zero_g(zero);
  }
  return t.result(5, "center dichotomy");
}

CriterionResult bit_recovery(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  constexpr int kWindow = 16;
  struct Draw {
    std::int64_t p;
    std::string bits;
    DeltaProfile profile;
  };
  std::vector<Draw> draws;
  for (int i = 0; i < 200; ++i) {
    Modulus ring(kPrimes[i % 3], 1);
    BitSeq s = random_bits(rng, kWindow, true);
    QuadTerms cob;
    if (rng.between(0, 3) != 0) cob = random_quad_terms(rng, ring, 3, -4, 4);
    CocycleSpec spec = CocycleSpec::transformed(
        CocycleSpec::eta(ring, s), unit_at(rng, ring, -2, 2),
        unit_at(rng, ring, -2, 2), std::move(cob));
    DeltaProfile profile = delta_profile(spec, kWindow);
    Recovery r = recover_bits(profile);
    t.expect(r.status == RecoveryStatus::Ok && r.bits && r.bits->to_string() == s.to_string(),
             [&] {
               return format_spec(spec) + ": recovered " + to_string(r.status) +
                      (r.bits ? " " + r.bits->to_string() : std::string());
             });
    draws.push_back({ring.prime(), s.to_string(), std::move(profile)});
  }
  for (std::size_t i = 0; i < draws.size(); ++i) {
    for (std::size_t j = i + 1; j < draws.size(); ++j) {
      if (draws[i].p != draws[j].p || draws[i].bits == draws[j].bits) continue;
      t.expect(compare_profiles(draws[i].profile, draws[j].profile) ==
                   WindowVerdict::Distinct,
               [&] { return draws[i].bits + " vs " + draws[j].bits + " not DISTINCT"; });
    }
  }
  return t.result(6, "bit recovery under transforms");
}

CriterionResult sections(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  auto samples = [&](const Modulus& ring) {
    std::vector<Series> out;
    for (int i = 0; i < 100; ++i) {
      int lo = static_cast<int>(rng.between(-4, 2));
      out.push_back(random_series(rng, ring, lo, lo + static_cast<int>(rng.between(0, 30))));
    }
    return out;
  };
  for (auto [p, m] : {std::pair{2, 2}, std::pair{3, 2}}) {
    ModRedContext c = make_mod_reduction_ctx(p, m, 1);
    t.absorb(verify_section(c, samples(c.h_ring), 24), c.name);
  }
  for (const char* bits : {"1(0)", "101(0)"}) {
    ExtProjContext c = make_ext_projection_ctx(
        share(CocycleSpec::eta(Modulus(2, 1), BitSeq::parse(bits))));
    t.absorb(verify_section(c, samples(c.h_ring), 24), c.name);
  }
  return t.result(7, "section identities");
}

BigInt big_pow(std::int64_t p, std::int64_t n) {
  BigInt out = 1;
  for (std::int64_t i = 0; i < n; ++i) out *= p;
  return out;
}

// Number of prime factors with multiplicity, by trial division.
std::int64_t big_omega(BigInt n) {
  std::int64_t count = 0;
  for (BigInt d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  }
  return n > 1 ? count + 1 : count;
}

CriterionResult classification(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  t.expect(!iso_test(primary_decompose({{4}}), primary_decompose({{2, 2}})),
           [] { return std::string("{4} and {2,2} identified"); });
  t.expect(iso_test(primary_decompose({{6}}), primary_decompose({{2, 3}})),
           [] { return std::string("{6} and {2,3} distinguished"); });
  for (std::int64_t p : kPrimes) {
    for (int m = 1; m <= 4; ++m) {
      CompositionData d = composition_data(p, m);
      std::vector<int> chain;
      for (int j = m; j >= 0; --j) chain.push_back(j);
      t.expect(d.length == m && d.delta == big_pow(p, m) && d.chain == chain, [&] {
        return "composition_data(" + std::to_string(p) + ", " + std::to_string(m) +
               ") = length " + std::to_string(d.length) + ", delta " + d.delta.str();
      });
    }
  }
  const std::int64_t primes[] = {2, 3, 5, 7};
  for (int i = 0; i < 100; ++i) {
    NuTable table;
    const int entries = static_cast<int>(rng.between(1, 4));
    for (int e = 0; e < entries; ++e) {
      std::int64_t p = primes[rng.between(0, 3)];
      int n = static_cast<int>(rng.between(1, 4));
      table[{p, n}] += rng.between(1, 3);
    }
    std::vector<std::int64_t> powers;
    for (const auto& [key, nu] : table) {
      for (std::int64_t c = 0; c < nu; ++c) {
        powers.push_back(big_pow(key.first, key.second).convert_to<std::int64_t>());
      }
    }
    // Regroup coprime prime powers into larger cyclic factors.
    std::vector<std::int64_t> orders;
    std::vector<std::vector<std::int64_t>> used;
    for (std::int64_t q : powers) {
      std::int64_t p = 2;
      while (q % p != 0) ++p;
      bool placed = false;
      for (std::size_t f = 0; f < orders.size() && !placed; ++f) {
        auto& ps = used[f];
        if (std::find(ps.begin(), ps.end(), p) == ps.end() && rng.coin()) {
          orders[f] *= q;
          ps.push_back(p);
          placed = true;
        }
      }
      if (!placed) {
        orders.push_back(q);
        used.push_back({p});
      }
    }
    BigInt group_order = 1;
    for (std::int64_t o : orders) group_order *= o;
    CompositionData d = composition_data(table);
    auto where = [&] {
      std::ostringstream os;
      for (const auto& [key, nu] : table) {
        os << "(" << key.first << "," << key.second << "):" << nu << " ";
      }
      return os.str() + "gives length " + std::to_string(d.length) + ", delta " +
             d.delta.str();
    };
    t.expect(iso_test(primary_decompose({orders}), table), where);
    t.expect(d.delta == group_order, where);
    t.expect(d.length == big_omega(group_order), where);
    BigInt product = 1;
    std::map<std::int64_t, NuTable> by_prime;
    for (const auto& [key, nu] : table) by_prime[key.first][key] = nu;
    for (const auto& [p, sub] : by_prime) {
      CompositionData dp = composition_data(sub);
      t.expect(dp.delta == big_pow(p, dp.length), where);
      product *= dp.delta;
    }
    t.expect(product == d.delta, where);
  }
  return t.result(8, "classification data");
}

Rational random_rational(Rng& rng, std::int64_t num, std::int64_t den_lo,
                         std::int64_t den_hi) {
  return Rational(rng.between(-num, num), rng.between(den_lo, den_hi));
}

// Half the draws are products of factors with prescribed roots.
RationalPoly random_rational_poly(Rng& rng) {
  const int degree = static_cast<int>(rng.between(1, 4));
  if (rng.coin()) {
    std::vector<Rational> lower;
    for (int i = 0; i < degree; ++i) lower.push_back(random_rational(rng, 12, 1, 8));
    return RationalPoly(std::move(lower));
  }
  std::vector<Rational> c{1};  // ascending, monic
  auto times = [&c](const std::vector<Rational>& f) {
    std::vector<Rational> out(c.size() + f.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += c[i] * f[j];
    }
    c = std::move(out);
  };
  while (static_cast<int>(c.size()) - 1 < degree) {
    if (degree - (static_cast<int>(c.size()) - 1) >= 2 && rng.coin()) {
      Rational u = random_rational(rng, 9, 6, 9), v = random_rational(rng, 9, 6, 9);
      if (v == 0) v = 1;
      times({u * u + v * v, -2 * u, 1});
    } else {
      times({-random_rational(rng, 9, 6, 9), 1});
    }
  }
  c.pop_back();
  return RationalPoly(std::move(c));
}

CriterionResult contractivity_oracles(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  int inside = 0;
  for (int i = 0; i < 500; ++i) {
    RationalPoly f = random_rational_poly(rng);
    auto expected = oracle::roots_inside_unit_circle(f, 1e-9);
    while (!expected) {
      f = random_rational_poly(rng);
      expected = oracle::roots_inside_unit_circle(f, 1e-9);
    }
    inside += *expected ? 1 : 0;
    const bool got = schur_cohn(f);
    t.expect(got == *expected, [&] {
      return "schur_cohn(" + f.to_string() + ") = " + (got ? "true" : "false");
    });
  }
  int nilpotent = 0;
  for (int i = 0; i < 500; ++i) {
    const std::int64_t p = kPrimes[i % 3];
    const int degree = static_cast<int>(rng.between(1, 5));
    std::vector<std::int64_t> lower;
    std::vector<Rational> rational;
    for (int j = 0; j < degree; ++j) {
      std::int64_t a = rng.between(-20, 20);
      if (rng.between(0, 3) != 0) a *= p;
      lower.push_back(a);
      rational.emplace_back(a);
    }
    RationalPoly f(std::move(rational));
    const bool expected = oracle::companion_nilpotent_mod(lower, p);
    nilpotent += expected ? 1 : 0;
    const bool got = omega_p_contractive(f, p);
    t.expect(got == expected, [&] {
      return "omega_p_contractive(" + f.to_string() + ", " + std::to_string(p) +
             ") = " + (got ? "true" : "false");
    });
  }
  CriterionResult r = t.result(9, "contractivity oracles");
  if (r.passed) {
    r.detail = std::to_string(inside) + "/500 inside the unit disc, " +
               std::to_string(nilpotent) + "/500 nilpotent mod p";
  }
  return r;
}

CriterionResult theta_morphism(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (auto [p, m] : {std::pair{2, 2}, std::pair{3, 2}}) {
    Modulus ring(p, m);
    for (int i = 0; i < 20; ++i) {
      Series x = Series::zero(ring);
      while (x.is_exact_zero()) {
        x = short_series(rng, ring, 5);
        if (rng.coin()) x = int_mul(p, x);
      }
      const int k = element_order_exponent(x);
      const std::int64_t pk = big_pow(p, k).convert_to<std::int64_t>();
      Modulus zring(p, k);
      auto where = [&] { return "x = " + format_series(x) + " over " + ring.to_string(); };
      t.expect(element_order(x) == oracle::additive_order(x), where);
      t.expect(stable_subgroup_locate(x) == k, where);
      t.expect(theta_x(x, Series::monomial(zring, 1, 0)) == x, where);
      for (int j = 0; j < 10; ++j) {
        Series z = short_series(rng, zring, 6), w = short_series(rng, zring, 6);
        Series tz = theta_x(x, z);
        t.expect(theta_x(x, z + w) == tz + theta_x(x, w), where);
        t.expect(theta_x(x, shift(z, 1)) == shift(tz, 1), where);
        t.expect(int_mul(pk, tz).is_exact_zero(), where);
        // {y : p^k y = 0} is p^(m-k) F_{p^m}((t)).
        Series y = short_series(rng, ring, 6);
        bool in_subgroup = true;
        for (Residue c : y.coeffs()) {
          in_subgroup = in_subgroup && c % big_pow(p, m - k).convert_to<std::int64_t>() == 0;
        }
        t.expect(int_mul(pk, y).is_exact_zero() == in_subgroup, [&] {
          return "p^k-torsion membership of " + format_series(y) + " with k = " +
                 std::to_string(k);
        });
      }
    }
  }
  return t.result(10, "theta_x morphism");
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  static const std::function<CriterionResult(std::uint64_t)> table[] = {
      cocycle_laws,     ultrametric_bounds, b_map_window,   extension_axioms,
      center_dichotomy, bit_recovery,       sections,       classification,
      contractivity_oracles, theta_morphism};
  if (id < 1 || id > kCriteria) {
    throw BadParams("criterion must be in [1, " + std::to_string(kCriteria) + "]");
  }
  try {
    return table[id - 1](seed + static_cast<std::uint64_t>(id));
  } catch (const Error& e) {
    return {id, "criterion " + std::to_string(id), false, 0,
            std::string("error: ") + e.what()};
  }
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::string line = std::string(r.passed ? "PASS" : "FAIL") + "  " +
                     std::to_string(r.id) + " " + r.name + " (" +
                     std::to_string(r.checked) + " checks)";
  if (!r.detail.empty()) line += ": " + r.detail;
  return line;
}

}  // namespace contraction::selftest
