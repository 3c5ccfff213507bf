#include <gtest/gtest.h>

#include "contraction/error.hpp"
#include "contraction/extension.hpp"
#include "support.hpp"

namespace contraction {
namespace {

using testing::S;

const Modulus F2(2, 1);
const Modulus F3(3, 1);

SpecRef eta(const Modulus& ring, const char* bits) {
  return share(CocycleSpec::eta(ring, BitSeq::parse(bits)));
}

ExtElement random_element(Rng& rng, const SpecRef& spec, int lo = 0) {
  return ExtElement(random_series(rng, spec->ring(), lo, lo + 4),
                    random_series(rng, spec->ring(), lo, lo + 4), spec);
}

TEST(Extension, MultiplicationExamples) {
  SpecRef spec = eta(F2, "1");
  Series a = S(F2, "t^0 + t^3"), b = S(F2, "t^1");
  EXPECT_EQ(ext_mul(ext_iota(spec, a), ext_iota(spec, b)), ext_iota(spec, a + b));
  ExtElement u = ext_mul(ext_sigma(spec, S(F2, "t^0")), ext_sigma(spec, S(F2, "t^2")));
  EXPECT_EQ(format_ext_element(u), "(1*t^1 ; 1*t^0 + 1*t^2)");
  ExtElement v(S(F2, "t^-1 + t^4"), S(F2, "t^0 + t^5"), spec);
  EXPECT_EQ(ext_mul(ext_identity(spec), v), v);
  EXPECT_THROW(ext_mul(v, ext_identity(eta(F2, "11"))), SpecMismatch);
}

TEST(Extension, InverseExamples) {
  SpecRef spec = eta(F2, "1");
  Series a = S(F2, "t^0 + t^3");
  EXPECT_EQ(ext_inv(ext_iota(spec, a)), ext_iota(spec, -a));
  EXPECT_EQ(ext_inv(ext_identity(spec)), ext_identity(spec));
  ExtElement u = ext_sigma(spec, S(F2, "t^0"));
  EXPECT_EQ(ext_inv(u), u);
  EXPECT_EQ(ext_mul(u, ext_inv(u)), ext_identity(spec));
}

TEST(Extension, GroupAxioms) {
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    SpecRef spec = share(CocycleSpec::eta(F3, random_bits(rng, 8)));
    for (int i = 0; i < 100; ++i) {
      ExtElement u = random_element(rng, spec, -1), v = random_element(rng, spec),
                 w = random_element(rng, spec, 1);
      EXPECT_EQ(ext_mul(ext_mul(u, v), w), ext_mul(u, ext_mul(v, w)));
      EXPECT_EQ(ext_mul(u, ext_inv(u)), ext_identity(spec));
      EXPECT_EQ(ext_mul(ext_inv(u), u), ext_identity(spec));
      EXPECT_EQ(ext_mul(u, ext_identity(spec)), u);
    }
  }
}

TEST(Extension, AlphaAndMorphisms) {
  Rng rng(42);
  SpecRef spec = eta(F3, "10110");
  for (int i = 0; i < 100; ++i) {
    ExtElement u = random_element(rng, spec), v = random_element(rng, spec, -1);
    int k = static_cast<int>(rng.between(-3, 3));
    EXPECT_EQ(ext_alpha(u, 0), u);
    EXPECT_EQ(ext_alpha(ext_mul(u, v), k), ext_mul(ext_alpha(u, k), ext_alpha(v, k)));
    EXPECT_EQ(ext_mul(u, v).g(), u.g() + v.g());
    EXPECT_EQ(ext_alpha(u, k).g(), shift(u.g(), k));
    // omega(g1, g2) = sigma(g1) sigma(g2) sigma(g1 g2)^-1
    ExtElement c = ext_mul(ext_mul(ext_sigma(spec, u.g()), ext_sigma(spec, v.g())),
                           ext_inv(ext_sigma(spec, u.g() + v.g())));
    EXPECT_EQ(c, ext_iota(spec, eval(*spec, u.g(), v.g())));
    ExtElement far = ext_alpha(u, 7);
    if (auto val = u.g().valuation()) EXPECT_EQ(far.g().valuation(), *val + 7);
  }
}

TEST(Extension, Commutators) {
  SpecRef spec = eta(F2, "1");
  ExtElement u = ext_sigma(spec, S(F2, "t^0")), v = ext_sigma(spec, S(F2, "t^2"));
  EXPECT_EQ(format_ext_element(commutator(u, v)), "(1*t^1 ; 0)");
  EXPECT_EQ(commutator(u, u), ext_identity(spec));
  EXPECT_EQ(commutator(ext_iota(spec, S(F2, "t^3")), v), ext_identity(spec));
  Rng rng(43);
  SpecRef s3 = eta(F3, "0110");
  for (int i = 0; i < 100; ++i) {
    ExtElement x = random_element(rng, s3), y = random_element(rng, s3);
    EXPECT_EQ(commutator(x, y),
              ext_iota(s3, antisymmetrize(*s3, x.g(), y.g())));
  }
}

TEST(Extension, CenterTest) {
  SpecRef spec = eta(F2, "1");
  EXPECT_TRUE(center_test(ext_iota(spec, S(F2, "t^0")), {0, 1, 2}).central);
  CenterVerdict v = center_test(ext_sigma(spec, S(F2, "t^0")), {2});
  EXPECT_FALSE(v.central);
  EXPECT_EQ(v.probe, 2);
  EXPECT_EQ(*v.witness, S(F2, "t^1"));
  SpecRef zero = eta(F2, "000");
  EXPECT_TRUE(center_test(ext_sigma(zero, S(F2, "t^0 + t^1")), {0, 1, 2, 3}).central);

  SpecRef s = eta(F3, "0010");
  ExtElement g = ext_sigma(s, S(F3, "2*t^-1 + t^2"));
  auto degree = center_witness_degree(g);
  ASSERT_TRUE(degree.has_value());
  EXPECT_EQ(*degree, 2 * 3 - 1);
  EXPECT_FALSE(center_test(g, {*degree}).central);
}

TEST(Extension, EquivalenceMap) {
  Rng rng(44);
  SpecRef base = eta(F3, "1101");
  QuadTerms f = random_quad_terms(rng, F3, 3, -1, 2);
  SpecRef target = add_coboundary(base, f);
  EXPECT_EQ(equivalence_map({}, ext_sigma(base, S(F3, "t^1")), add_coboundary(base, {})),
            ExtElement(Series::zero(F3), S(F3, "t^1"), add_coboundary(base, {})));
  for (int i = 0; i < 200; ++i) {
    ExtElement u = random_element(rng, base), v = random_element(rng, base);
    ExtElement pu = equivalence_map(f, u, target), pv = equivalence_map(f, v, target);
    EXPECT_EQ(equivalence_map(f, ext_mul(u, v), target), ext_mul(pu, pv));
    EXPECT_EQ(equivalence_map(f, ext_alpha(u, 2), target), ext_alpha(pu, 2));
    EXPECT_EQ(equivalence_map_inverse(f, pu, base), u);
    EXPECT_EQ(pu.g(), u.g());
  }
  ExtElement kernel = ext_iota(base, S(F3, "t^2"));
  EXPECT_EQ(equivalence_map(f, kernel, target).a(), kernel.a());
  EXPECT_THROW(equivalence_map(f, ext_identity(base), base), SpecMismatch);
}

TEST(Extension, Nilpotency) {
  Rng rng(45);
  SpecRef spec = eta(F2, "1011");
  std::vector<ExtTriple> samples;
  for (int i = 0; i < 100; ++i) {
    samples.push_back({random_element(rng, spec), random_element(rng, spec),
                       random_element(rng, spec)});
  }
  EXPECT_TRUE(nilpotency_probe(samples).passed());
  SpecRef zero = eta(F2, "0000");
  ExtElement u = random_element(rng, zero), v = random_element(rng, zero);
  EXPECT_EQ(commutator(u, v), ext_identity(zero));
}

TEST(Extension, ElementText) {
  SpecRef spec = eta(F2, "1");
  ExtElement u = parse_ext_element(spec, "( t^0 + O(t^4) ; t^-1 )");
  EXPECT_EQ(format_ext_element(u), "(1*t^0 + O(t^4) ; 1*t^-1)");
  EXPECT_THROW(parse_ext_element(spec, "t^0 ; t^1"), SyntaxError);
  EXPECT_THROW(parse_ext_element(spec, "(t^0 ; 5*t^1)"), SyntaxError);
}

}  // namespace
}  // namespace contraction
