#include <gtest/gtest.h>

#include "contraction/error.hpp"
#include "contraction/section.hpp"
#include "support.hpp"

namespace contraction {
namespace {

using testing::S;

const Modulus F2(2, 1);
const Modulus Z4(2, 2);

std::vector<Series> samples(Rng& rng, const Modulus& ring, int count) {
  std::vector<Series> out;
  for (int i = 0; i < count; ++i) {
    int lo = static_cast<int>(rng.between(-3, 3));
    out.push_back(random_series(rng, ring, lo, lo + static_cast<int>(rng.between(0, 12))));
  }
  return out;
}

TEST(ModRed, Contexts) {
  ModRedContext c = make_mod_reduction_ctx(2, 2, 1);
  EXPECT_EQ(c.ell(), 2u);
  EXPECT_EQ(c.reps[0], Series::zero(F2));
  EXPECT_EQ(c.reps[1], Series::monomial(F2, 1, 0));
  EXPECT_EQ(c.lifts[1], Series::monomial(Z4, 1, 0));
  EXPECT_EQ(make_mod_reduction_ctx(2, 3, 2).ell(), 4u);
  EXPECT_TRUE(validate(c).empty());
  EXPECT_THROW(make_mod_reduction_ctx(2, 2, 3), BadParams);
  EXPECT_THROW(make_mod_reduction_ctx(2, 2, 0), BadParams);

  ModRedContext id = make_mod_reduction_ctx(3, 1, 1);
  Rng rng(61);
  for (const Series& h : samples(rng, Modulus(3, 1), 20)) {
    EXPECT_EQ(build_section(id, h, 20).partial, h);
  }
}

TEST(ModRed, DigitsAreCoefficients) {
  ModRedContext c = make_mod_reduction_ctx(2, 2, 1);
  Digits d = digit_expand(c, S(F2, "t^0 + t^3"), 3);
  EXPECT_EQ(d.level, 0);
  EXPECT_EQ(d.j, (std::vector<std::size_t>{1, 0, 0, 1}));
  Digits e = digit_expand(c, Series::zero(F2), 4);
  EXPECT_EQ(e.j, std::vector<std::size_t>(5, 0));
  EXPECT_THROW(digit_expand(c, S(F2, "t^0 + O(t^3)"), 3), InsufficientPrecision);
  EXPECT_THROW(digit_expand(c, S(Z4, "t^0"), 3), MalformedInput);
}

TEST(ModRed, SectionIsCoefficientwiseLift) {
  ModRedContext c = make_mod_reduction_ctx(3, 2, 1);
  Rng rng(62);
  for (const Series& h : samples(rng, Modulus(3, 1), 50)) {
    SectionValue<Series> s = build_section(c, h, 20);
    EXPECT_EQ(s.partial, lift_to(h, Modulus(3, 2)));
    EXPECT_EQ(s.agrees_through, 20);
    EXPECT_EQ(s.certified, truncate(s.partial, 21));
  }
  EXPECT_EQ(build_section(c, Series::zero(Modulus(3, 1)), 10).partial,
            Series::zero(Modulus(3, 2)));
}

TEST(ModRed, DigitUniquenessExhaustive) {
  // Every perturbation of one digit moves the partial product out of the coset.
  ModRedContext c = make_mod_reduction_ctx(2, 3, 2);
  Rng rng(63);
  for (const Series& h : samples(rng, Z4, 20)) {
    Digits d = digit_expand(c, h, 8);
    for (std::size_t i = 0; i < d.j.size(); ++i) {
      for (std::size_t alt = 0; alt < c.ell(); ++alt) {
        Series sum = Series::zero(Z4);
        for (std::size_t k = 0; k < d.j.size(); ++k) {
          std::size_t j = k == i ? alt : d.j[k];
          sum = sum + shift(c.reps[j], d.level + static_cast<int>(k));
        }
        Series diff = h - sum;
        bool in_coset = diff.is_exact_zero() || diff.start() >= 9;
        EXPECT_EQ(in_coset, alt == d.j[i]);
      }
    }
  }
}

TEST(ExtProj, Contexts) {
  SpecRef s1 = share(CocycleSpec::eta(F2, BitSeq::parse("1")));
  ExtProjContext c = make_ext_projection_ctx(s1);
  EXPECT_EQ(c.ell(), 2u);
  EXPECT_TRUE(validate(c).empty());
  SpecRef s3 = share(CocycleSpec::eta(Modulus(3, 1), BitSeq::parse("11")));
  EXPECT_EQ(make_ext_projection_ctx(s3).ell(), 3u);
  ParamSeq open(F2, 0, 1, {}, TailBound::unknown(), TailBound::zero());
  EXPECT_THROW(make_ext_projection_ctx(share(CocycleSpec::param_omega(open))), BadParams);
}

TEST(ExtProj, ProductOfLiftedDigits) {
  SpecRef spec = share(CocycleSpec::eta(F2, BitSeq::parse("1")));
  ExtProjContext c = make_ext_projection_ctx(spec);
  SectionValue<ExtElement> s = build_section(c, S(F2, "t^0 + t^2"), 2);
  // sigma(t^0) alpha^2(sigma(t^0)) = (eta(t^0, t^2), t^0 + t^2) = (t, t^0 + t^2)
  EXPECT_EQ(format_ext_element(s.partial), "(1*t^1 ; 1*t^0 + 1*t^2)");
  EXPECT_EQ(s.certified.g(), S(F2, "t^0 + t^2 + O(t^3)"));
  EXPECT_TRUE(ext_agree(s.certified, s.partial));
}

TEST(ExtProj, SectionIdentity) {
  Rng rng(64);
  for (const char* bits : {"0(0)", "1(0)", "101(0)"}) {
    SpecRef spec = share(CocycleSpec::eta(F2, BitSeq::parse(bits)));
    ExtProjContext c = make_ext_projection_ctx(spec);
    for (const Series& h : samples(rng, F2, 100)) {
      SectionValue<ExtElement> s = build_section(c, h, 24);
      EXPECT_TRUE(agree(s.certified.g(), h));
      EXPECT_GE(s.certified.g().prec().value(), 25);
      EXPECT_EQ(s.partial.g(), truncate(h, 25).is_exact() ? h : s.partial.g());
    }
  }
}

TEST(ExtProj, UnknownBitsBlockDeepDigits) {
  SpecRef spec = share(CocycleSpec::eta(F2, BitSeq::parse("1")));
  ExtProjContext c = make_ext_projection_ctx(spec);
  EXPECT_THROW(build_section(c, S(F2, "t^0 + t^5 + t^12"), 16), WindowTooSmall);
}

TEST(Verify, NamedContextsPass) {
  Rng rng(65);
  ModRedContext m = make_mod_reduction_ctx(2, 2, 1);
  CheckReport rm = verify_section(m, samples(rng, F2, 100), 24);
  EXPECT_TRUE(rm.passed());
  EXPECT_EQ(rm.checked, 201u);
  SpecRef spec = share(CocycleSpec::eta(F2, BitSeq::parse("101(0)")));
  CheckReport re = verify_section(make_ext_projection_ctx(spec), samples(rng, F2, 100), 24);
  EXPECT_TRUE(re.passed()) << (re.witnesses.empty() ? "" : re.witnesses[0].lhs);
}

TEST(Verify, EquivarianceShiftsDigits) {
  ModRedContext c = make_mod_reduction_ctx(2, 2, 1);
  Series h = S(F2, "t^-2 + t^1 + t^4");
  Digits d = digit_expand(c, h, 6);
  Digits db = digit_expand(c, shift(h, 1), 7);
  EXPECT_EQ(db.level, d.level + 1);
  EXPECT_EQ(db.j, d.j);
}

TEST(Verify, CorruptedLiftTableFails) {
  ModRedContext c = make_mod_reduction_ctx(2, 2, 1);
  std::vector<Series> bad = c.lifts;
  bad[1] = Series::monomial(Z4, 3, 1);
  ModRedContext broken = replace_lifts(c, bad);
  EXPECT_FALSE(validate(broken).empty());
  Rng rng(66);
  CheckReport r = verify_section(broken, samples(rng, F2, 20), 12);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.witnesses.empty());

  SpecRef spec = share(CocycleSpec::eta(F2, BitSeq::parse("1(0)")));
  ExtProjContext e = make_ext_projection_ctx(spec);
  std::vector<ExtElement> lifts = e.lifts;
  lifts[1] = ExtElement(Series::zero(F2), S(F2, "t^0 + t^1"), spec);
  EXPECT_FALSE(verify_section(replace_lifts(e, lifts), samples(rng, F2, 20), 12).passed());
}

TEST(Verify, DifferentLiftsStillGiveSections) {
  // Lifts (a, c t^0) with a in the unit ball give another section.
  SpecRef spec = share(CocycleSpec::eta(F2, BitSeq::parse("11(0)")));
  ExtProjContext e = make_ext_projection_ctx(spec);
  std::vector<ExtElement> lifts = e.lifts;
  lifts[1] = ExtElement(S(F2, "t^0 + t^2"), S(F2, "t^0"), spec);
  ExtProjContext other = replace_lifts(e, lifts);
  EXPECT_TRUE(validate(other).empty());
  Rng rng(67);
  EXPECT_TRUE(verify_section(other, samples(rng, F2, 30), 16).passed());
}

TEST(Section, LocalConstancy) {
  SpecRef spec = share(CocycleSpec::eta(F2, BitSeq::parse("1011(0)")));
  ExtProjContext c = make_ext_projection_ctx(spec);
  Rng rng(68);
  for (int i = 0; i < 30; ++i) {
    Series h = random_series(rng, F2, 0, 10);
    Series h2 = h + shift(random_series(rng, F2, 0, 5), 11);
    auto a = build_section(c, h, 10), b = build_section(c, h2, 10);
    EXPECT_EQ(a.partial, b.partial);
  }
}

}  // namespace
}  // namespace contraction
