#include <gtest/gtest.h>

#include "contraction/checks.hpp"
#include "contraction/cocycle.hpp"
#include "contraction/error.hpp"
#include "support.hpp"

namespace contraction {
namespace {

using testing::Dense;
using testing::S;

const Modulus F2(2, 1);
const Modulus F3(3, 1);
const Modulus Z4(2, 2);

// Brute-force evaluations on exact inputs. nullopt marks a coefficient that
// depends on an unknown bit.
std::optional<std::int64_t> eta_oracle(const Modulus& ring, const BitSeq& s,
                                       const Series& x, const Series& y, int d) {
  Dense dx = Dense::of(x), dy = Dense::of(y);
  std::int64_t acc = 0;
  for (const auto& [i, xi] : dx.c) {
    int n = d - i;
    if (n < 1) continue;
    std::int64_t yj = dy.at(d + n);
    if (yj == 0) continue;
    auto bit = s.at(n);
    if (!bit) return std::nullopt;
    acc = ring.add(acc, ring.mul(*bit, ring.mul(xi, yj)));
  }
  return acc;
}

std::int64_t omega_oracle(const Modulus& ring, int n, const Series& x,
                          const Series& y, int i) {
  return ring.mul(Dense::of(x).at(i), Dense::of(y).at(i + n));
}

TEST(BasisOmega, Examples) {
  for (int n : {-2, 0, 3}) {
    for (int i0 : {-1, 0, 2}) {
      for (int j0 : {-3, 1, 5}) {
        Series v = eval_basis_omega(n, Series::monomial(F2, 1, i0),
                                    Series::monomial(F2, 1, j0));
        EXPECT_EQ(v, j0 == i0 + n ? Series::monomial(F2, 1, i0) : Series::zero(F2));
      }
    }
  }
  EXPECT_EQ(eval_basis_omega(1, S(F2, "t^0 + t^1"), S(F2, "t^1 + t^2")),
            S(F2, "t^0 + t^1"));
}

TEST(BasisOmega, EmptyWindowFlag) {
  BasisEval r = eval_basis_omega_checked(0, S(F2, "t^0 + O(t^1)"), S(F2, "O(t^0)"));
  EXPECT_TRUE(r.empty_window);
  EXPECT_TRUE(r.value.is_zero_at_precision());
}

TEST(BasisOmega, MatchesOracleWithPrecision) {
  Rng rng(21);
  for (int iter = 0; iter < 300; ++iter) {
    int n = static_cast<int>(rng.between(-4, 4));
    Series x = testing::random_maybe_truncated(rng, Z4, -3, 4);
    Series y = testing::random_maybe_truncated(rng, Z4, -3, 4);
    Series v = eval_basis_omega(n, x, y);
    for (int i = -10; i < 12; ++i) {
      auto c = v.at(i);
      if (!c) continue;
      bool xi_known = x.at(i).has_value(), yj_known = y.at(i + n).has_value();
      bool known = (xi_known && yj_known) || (xi_known && *x.at(i) == 0) ||
                   (yj_known && *y.at(i + n) == 0);
      ASSERT_TRUE(known);
      EXPECT_EQ(*c, Z4.mul(x.at(i).value_or(0), y.at(i + n).value_or(0)));
    }
    if (x.is_exact() && y.is_exact()) {
      EXPECT_TRUE(v.is_exact());
      for (int i = -10; i < 12; ++i) EXPECT_EQ(v.at(i), omega_oracle(Z4, n, x, y, i));
    }
  }
}

TEST(Eta, Examples) {
  BitSeq s = BitSeq::parse("1011");
  Series one = Series::monomial(F2, 1, 0);
  for (int n = 1; n <= 4; ++n) {
    Series v = eval_eta(s, one, Series::monomial(F2, 1, 2 * n));
    EXPECT_EQ(v, *s.at(n) ? Series::monomial(F2, 1, n) : Series::zero(F2));
    EXPECT_EQ(eval_eta(s, Series::monomial(F2, 1, 2 * n), one), Series::zero(F2));
  }
  EXPECT_EQ(eval_eta(BitSeq::parse("000"), S(F2, "t^0 + t^1"), S(F2, "t^2 + t^5")),
            Series::zero(F2));
  EXPECT_EQ(eval_eta(BitSeq::parse("1"), one, S(F2, "t^2")), S(F2, "t^1"));
}

TEST(Eta, UnknownBitsLimitPrecision) {
  BitSeq s = BitSeq::parse("11");
  Series one = Series::monomial(F3, 1, 0);
  // y = t^2 + t^6: the t^6 term meets bit 3 at degree 3.
  Series v = eval_eta(s, one, S(F3, "t^2 + t^6"));
  EXPECT_EQ(v, S(F3, "1*t^1 + O(t^3)"));
  EXPECT_THROW(eval_eta(s, one, Series::monomial(F3, 1, 6)), WindowTooSmall);
}

TEST(Eta, MatchesOracle) {
  Rng rng(22);
  for (int iter = 0; iter < 400; ++iter) {
    BitSeq s = random_bits(rng, static_cast<int>(rng.between(1, 6)));
    Series x = random_series(rng, F3, static_cast<int>(rng.between(-3, 2)), 3);
    Series y = random_series(rng, F3, static_cast<int>(rng.between(-3, 2)), 5);
    Series v = Series::zero(F3);
    try {
      v = eval_eta(s, x, y);
    } catch (const WindowTooSmall&) {
      continue;
    }
    int limit = v.is_exact() ? 20 : v.prec().value();
    for (int d = -10; d < limit; ++d) {
      auto expected = eta_oracle(F3, s, x, y, d);
      ASSERT_TRUE(expected.has_value()) << "d=" << d;
      EXPECT_EQ(v.at(d), *expected);
    }
    if (!v.is_exact()) EXPECT_FALSE(eta_oracle(F3, s, x, y, limit).has_value());
  }
}

TEST(Eta, TruncatedInputsAreSound) {
  // Replacing unknown coefficients by anything keeps known outputs.
  Rng rng(23);
  BitSeq s = BitSeq::parse("110101101");
  for (int iter = 0; iter < 200; ++iter) {
    Series x = random_series(rng, Z4, -2, 4);
    Series y = random_series(rng, Z4, -1, 6);
    Series tx = truncate(x, static_cast<int>(rng.between(0, 6)));
    Series ty = truncate(y, static_cast<int>(rng.between(1, 8)));
    Series full = Series::zero(Z4), part = Series::zero(Z4);
    try {
      full = eval_eta(s, x, y);
      part = eval_eta(s, tx, ty);
    } catch (const WindowTooSmall&) {
      continue;
    }
    EXPECT_TRUE(agree(full, part));
  }
}

TEST(ParamOmega, Examples) {
  Rng rng(24);
  ParamSeq a = random_param_seq(rng, F3, -4, 4);
  Series one = Series::monomial(F3, 1, 0);
  for (int m = -4; m <= 4; ++m) {
    EXPECT_EQ(eval_param_omega(a, one, Series::monomial(F3, 1, m)), *a.entry(m));
  }
  ParamSeq single(F3, -3, 3, {{2, S(F3, "t^1")}});
  for (int iter = 0; iter < 100; ++iter) {
    Series x = random_series(rng, F3, -2, 3);
    Series y = random_series(rng, F3, -2, 3);
    EXPECT_EQ(eval_param_omega(single, x, y),
              ring_mul(S(F3, "t^1"), eval_basis_omega(2, x, y)));
    EXPECT_EQ(eval_param_omega(a, x, Series::zero(F3)), Series::zero(F3));
  }
}

TEST(ParamOmega, TailModels) {
  Series one = Series::monomial(F2, 1, 0);
  ParamSeq unknown(F2, -2, 2, {{1, S(F2, "t^0")}}, TailBound::unknown(),
                   TailBound::unknown());
  EXPECT_EQ(eval_param_omega(unknown, one, Series::monomial(F2, 1, 1)), one);
  EXPECT_THROW(eval_param_omega(unknown, one, S(F2, "t^1 + t^5")), WindowTooSmall);
  ParamSeq floor(F2, -2, 2, {{1, S(F2, "t^0")}}, TailBound::at_least(3),
                 TailBound::zero());
  EXPECT_EQ(eval_param_omega(floor, one, S(F2, "t^1 + t^5")), S(F2, "1*t^0 + O(t^3)"));
}

TEST(ParamOmega, DecayCheck) {
  ParamSeq good(F2, -2, 2, {{0, S(F2, "t^0")}, {1, S(F2, "t^1")}, {2, S(F2, "t^3")}});
  EXPECT_FALSE(good.decay_violation(0).has_value());
  ParamSeq bad(F2, -2, 2, {{1, S(F2, "t^2")}, {2, S(F2, "t^0")}});
  EXPECT_TRUE(bad.decay_violation(0).has_value());
}

TEST(Coboundary, Examples) {
  Rng rng(25);
  QuadTerms terms = random_quad_terms(rng, F3, 3, -2, 2);
  for (int iter = 0; iter < 100; ++iter) {
    Series x = random_series(rng, F3, -2, 3);
    Series y = random_series(rng, F3, -1, 4);
    EXPECT_EQ(eval_coboundary(terms, x, Series::zero(F3)), Series::zero(F3));
    EXPECT_EQ(eval_coboundary(terms, x, y), eval_coboundary(terms, y, x));
    EXPECT_EQ(eval_coboundary(terms, x, y), eval_coboundary_bilinear(terms, x, y));
  }
  QuadTerms square{{0, Series::monomial(F2, 1, 0)}};
  Series one = Series::monomial(F2, 1, 0);
  EXPECT_EQ(eval_quadratic(square, S(F2, "t^0 + t^3")), S(F2, "t^0 + t^3"));
  EXPECT_EQ(eval_coboundary(square, one, one), Series::zero(F2));
}

TEST(Coboundary, DirectQuadraticOracle) {
  // f(x) = sum_k u_k sum_i x_i x_{i+k} t^i computed without the library's
  // basis evaluation.
  Rng rng(26);
  for (int iter = 0; iter < 100; ++iter) {
    QuadTerms terms = random_quad_terms(rng, Z4, 3, -2, 2);
    Series x = random_series(rng, Z4, -2, 3);
    Dense dx = Dense::of(x);
    Series expected = Series::zero(Z4);
    for (const auto& [k, u] : terms) {
      std::vector<std::int64_t> c;
      for (int i = -2; i <= 3; ++i) c.push_back(Z4.mul(dx.at(i), dx.at(i + k)));
      expected = expected + ring_mul(u, Series::make(Z4, -2, c, Prec::exact()));
    }
    EXPECT_EQ(eval_quadratic(terms, x), expected);
  }
}

TEST(Transformed, IdentityTransformAndScaling) {
  Rng rng(27);
  Series one = Series::monomial(F2, 1, 0);
  CocycleSpec base = CocycleSpec::eta(F2, BitSeq::parse("1011"));
  CocycleSpec same = CocycleSpec::transformed(base, one, one);
  for (int iter = 0; iter < 100; ++iter) {
    Series x = random_series(rng, F2, 0, 3);
    Series y = random_series(rng, F2, 0, 3);
    EXPECT_EQ(eval(same, x, y), eval(base, x, y));
  }
  Series a = S(F2, "t^1 + t^2");
  Series b = S(F2, "t^2 + t^3");
  CocycleSpec scaled = CocycleSpec::transformed(base, a, b);
  for (int n : {1, 3, 4}) {
    Series v = eval(scaled, one, Series::monomial(F2, 1, 2 * n));
    EXPECT_EQ(v.valuation(), 1 + 2 + n);
  }
  EXPECT_THROW(CocycleSpec::transformed(base, S(F2, "O(t^2)"), one), MalformedInput);
}

TEST(BMap, Examples) {
  Rng rng(28);
  ParamSeq a = random_param_seq(rng, F3, -5, 5);
  ParamSeq b = b_map(CocycleSpec::param_omega(a), -5, 5);
  for (int m = -5; m <= 5; ++m) EXPECT_EQ(*b.entry(m), *a.entry(m));

  ParamSeq basis = b_map(CocycleSpec::basis_omega(F3, 2), -4, 4);
  for (int m = -4; m <= 4; ++m) {
    EXPECT_EQ(*basis.entry(m), m == 2 ? Series::monomial(F3, 1, 0) : Series::zero(F3));
  }
  BitSeq s = BitSeq::parse("101");
  ParamSeq eta = b_map(CocycleSpec::eta(F3, s), -3, 6);
  for (int m = -3; m <= 6; ++m) {
    bool set = m > 0 && m % 2 == 0 && *s.at(m / 2) == 1;
    EXPECT_EQ(*eta.entry(m), set ? Series::monomial(F3, 1, m / 2) : Series::zero(F3));
  }
}

TEST(Antisymmetrize, Examples) {
  Rng rng(29);
  QuadTerms terms = random_quad_terms(rng, F3, 3, -1, 2);
  CocycleSpec cob = CocycleSpec::quad_coboundary(F3, terms);
  BitSeq s = BitSeq::parse("1101");
  CocycleSpec eta = CocycleSpec::eta(F3, s);
  Series one = Series::monomial(F3, 1, 0);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(antisymmetrize(eta, one, Series::monomial(F3, 1, 2 * n)),
              *s.at(n) ? Series::monomial(F3, 1, n) : Series::zero(F3));
  }
  Series u = Series::monomial(F3, 1, 0);
  CocycleSpec eta_plus = CocycleSpec::transformed(eta, u, u, terms);
  for (int iter = 0; iter < 100; ++iter) {
    Series x = random_series(rng, F3, 0, 3);
    Series y = random_series(rng, F3, 0, 4);
    EXPECT_EQ(antisymmetrize(cob, x, y), Series::zero(F3));
    EXPECT_TRUE(antisymmetrize(eta, x, x).is_zero_at_precision());
    EXPECT_TRUE(agree(antisymmetrize(eta_plus, x, y), antisymmetrize(eta, x, y)));
  }
}

TEST(Checks, NegativeControls) {
  Rng rng(30);
  std::vector<Triple> triples;
  std::vector<Pair> pairs;
  for (int i = 0; i < 50; ++i) {
    triples.push_back({random_series(rng, F3, -1, 3), random_series(rng, F3, -1, 3),
                       random_series(rng, F3, -1, 3)});
    pairs.push_back({random_series(rng, F3, -1, 3), random_series(rng, F3, -1, 3)});
  }
  CocycleFn square = [](const Series& x, const Series&) {
    return eval_basis_omega(0, x, x);
  };
  CheckReport r = check_cocycle_identity(square, triples);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].inputs.size(), 3u);

  CocycleFn product = [](const Series& x, const Series& y) { return ring_mul(x, y); };
  EXPECT_TRUE(check_cocycle_identity(product, triples).passed());
  EXPECT_FALSE(check_equivariance(product, pairs, 1, 1).passed());
  EXPECT_TRUE(check_equivariance(product, pairs, 0, 0).passed());

  Series zero = Series::zero(F3);
  CocycleSpec eta = CocycleSpec::eta(F3, BitSeq::parse("11"));
  EXPECT_TRUE(check_cocycle_identity(eta, {{zero, zero, zero}}).passed());
  EXPECT_TRUE(check_biadditivity(as_function(eta), triples).passed());
  EXPECT_FALSE(check_biadditivity(square, triples).passed());
}

TEST(SpecText, RoundTrip) {
  const char* texts[] = {"omega:3", "omega:-2", "eta:1011", "cob:0:1*t^0,2:1*t^1 + 1*t^3",
                         "xform(eta:101;a=1*t^0 + 1*t^1;b=1*t^0 + 1*t^1)",
                         "xform(eta:11;a=1*t^2;b=1*t^0;cob=1:1*t^0)"};
  for (const char* t : texts) {
    CocycleSpec spec = parse_spec(F2, t);
    EXPECT_EQ(format_spec(spec), t);
    EXPECT_EQ(parse_spec(F2, format_spec(spec)), spec);
  }
  Rng rng(31);
  CocycleSpec param = CocycleSpec::param_omega(random_param_seq(rng, F3, -3, 3));
  EXPECT_EQ(parse_spec(F3, format_spec(param)), param);
  EXPECT_THROW(parse_spec(F2, "eta:10x"), SyntaxError);
  EXPECT_THROW(parse_spec(F2, "bogus"), SyntaxError);
  EXPECT_THROW(parse_spec(F2, "param:@missing.json"), SyntaxError);
}

}  // namespace
}  // namespace contraction
