#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "contraction/cli.hpp"

namespace contraction::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(CONTRACTION_TEST_DATA) + "/" + name;
}

TEST(Cli, CocycleEval) {
  Result r = call({"cocycle", "eval", "--p", "2", "--spec", "eta:1", "t^0", "t^2"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "1*t^1\n");
  Result j = call({"--json", "cocycle", "eval", "--spec", "omega:2", "t^0", "t^2"});
  EXPECT_EQ(json::parse(j.out)["result"], "1*t^0");
  Result a = call({"cocycle", "antisym", "--spec", "eta:1(0)", "t^0", "t^2"});
  EXPECT_EQ(a.out, "1*t^1\n");
}

TEST(Cli, SeriesOps) {
  EXPECT_EQ(call({"series", "add", "t^0 + t^1", "t^1"}).out, "1*t^0\n");
  EXPECT_EQ(call({"--p", "3", "series", "neg", "t^0"}).out, "2*t^0\n");
  EXPECT_EQ(call({"series", "shift", "t^0 + O(t^2)", "--k", "-3"}).out,
            "1*t^-3 + O(t^-1)\n");
  EXPECT_EQ(call({"--p", "2", "--m", "2", "series", "scale", "t^0 + 3*t^2", "--k", "2"}).out,
            "2*t^0 + 2*t^2\n");
  EXPECT_EQ(call({"--prec", "2", "series", "mul", "t^0 + t^1", "t^0 + t^1"}).out,
            "1*t^0 + O(t^2)\n");
  EXPECT_EQ(call({"series", "abs", "t^3"}).code, kOk);
}

TEST(Cli, FingerprintExample) {
  Result r = call({"fingerprint", "--p", "2", "--spec",
                   "xform(eta:101;a=t^0 + t^1;b=t^0 + t^1)", "--window", "3"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("bits: 101\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("c: 0\n"), std::string::npos);

  Result j = call({"--json", "fingerprint", "--spec", "eta:1101", "--window", "4",
                   "--probes", "random:5", "--seed", "3"});
  json doc = json::parse(j.out);
  EXPECT_EQ(doc["format"], 1);
  EXPECT_EQ(doc["bits"], "1101");
  EXPECT_EQ(doc["probe_check"]["mismatched"], 0);
  EXPECT_EQ(doc["profile"].size(), 4u);
}

TEST(Cli, FingerprintDeterministic) {
  std::vector<std::string> args{"--json", "--seed", "11", "fingerprint", "--spec",
                                "eta:10110", "--window", "5", "--probes", "random:4"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, Section) {
  Result r = call({"section", "--ctx", "modred:2,2,1", "--input", "t^0 + t^3", "--upto", "4"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "1*t^0 + 1*t^3 + O(t^5)\nagrees-through=t^4\n");

  Result e = call({"section", "--ctx", "extproj:eta:1(0)", "--input", "t^0 + t^2",
                   "--upto", "2", "--verify", "20"});
  EXPECT_EQ(e.code, kOk) << e.err;
  EXPECT_NE(e.out.find("agrees-through=t^2"), std::string::npos) << e.out;
  EXPECT_NE(e.out.find("PASS"), std::string::npos) << e.out;

  Result el = call({"section", "--ctx", "extproj:eta:1(0)", "--input", "(t^5 ; t^0 + t^2)",
                    "--upto", "2"});
  EXPECT_EQ(el.out, e.out.substr(0, e.out.find("PASS")));

  Result j = call({"--json", "section", "--ctx", "modred:3,2,1", "--input", "2*t^-1",
                   "--upto", "3"});
  json doc = json::parse(j.out);
  EXPECT_EQ(doc["digits"]["level"], -1);
  EXPECT_EQ(doc["digits"]["j"][0], 2);
  EXPECT_EQ(doc["agrees_through"], 3);
}

TEST(Cli, ExtOps) {
  Result m = call({"ext", "mul", "--spec", "eta:1(0)", "(0 ; t^0)", "(0 ; t^2)"});
  EXPECT_EQ(m.out, "(1*t^1 ; 1*t^0 + 1*t^2)\n");
  Result c = call({"ext", "center", "--spec", "eta:1", "(0 ; t^0)", "--probes", "0:4"});
  EXPECT_EQ(c.code, kOk) << c.err;
  EXPECT_NE(c.out.find("not central: probe t^2"), std::string::npos) << c.out;
  Result z = call({"ext", "center", "--spec", "eta:1", "(t^1 ; 0)"});
  EXPECT_NE(z.out.find("central"), std::string::npos);
  EXPECT_EQ(call({"ext", "nilpotency", "--spec", "eta:11(0)", "--samples", "30"}).code, kOk);
  EXPECT_EQ(call({"ext", "alpha", "--spec", "eta:1", "(t^0 ; t^1)", "--k", "2"}).out,
            "(1*t^2 ; 1*t^3)\n");
}

TEST(Cli, CocycleChecks) {
  EXPECT_EQ(call({"cocycle", "check", "--spec", "omega:3", "--samples", "50"}).code, kOk);
  EXPECT_EQ(call({"cocycle", "equivariance", "--spec", "cob:1:t^0", "--samples", "50"}).code,
            kOk);
  Result b = call({"cocycle", "bmap", "--spec", "param:@" + data("param_small.json"),
                   "--range", "0:2"});
  EXPECT_EQ(b.out, "b_0 = 0\nb_1 = 1*t^1\nb_2 = 1*t^3\n");
}

TEST(Cli, Classify) {
  Result four = call({"--json", "classify", "abelian", "--orders", "4"});
  Result klein = call({"--json", "classify", "abelian", "--orders", "2,2"});
  EXPECT_EQ(four.code, kOk);
  EXPECT_NE(json::parse(four.out)["table"], json::parse(klein.out)["table"]);

  Result poly = call({"--json", "classify", "poly", "--place", "inf", "--poly",
                      "x^2 - 1/2*x + 1/8"});
  json p = json::parse(poly.out);
  EXPECT_EQ(p["contractive"], true);
  EXPECT_EQ(p["test"], "schur-cohn");
  Result padic = call({"classify", "poly", "--place", "p:2", "--poly", "x^2 - 2"});
  EXPECT_EQ(padic.out, "contractive=true test=p-adic-valuation\n");

  Result spec = call({"classify", "spec", "--file", data("spec_permuted.json")});
  EXPECT_EQ(spec.code, kOk) << spec.err;
  json s = json::parse(spec.out);
  EXPECT_EQ(s["blocks"].size(), 2u);
  EXPECT_EQ(s["blocks"][0]["place"], "inf");
  EXPECT_EQ(s["blocks"][1]["mult"], 2);

  Result bad = call({"classify", "spec", "--file", data("spec_not_contractive.json")});
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("schur-cohn"), std::string::npos) << bad.err;
}

TEST(Cli, UsageErrorsPrintGrammar) {
  Result s = call({"series", "add", "t^1 + t^0", "t^0"});
  EXPECT_EQ(s.code, kUsage);
  EXPECT_NE(s.err.find("term   :="), std::string::npos) << s.err;
  Result spec = call({"cocycle", "eval", "--spec", "zeta:1", "t^0", "t^0"});
  EXPECT_EQ(spec.code, kUsage);
  EXPECT_NE(spec.err.find("xform("), std::string::npos);
  Result el = call({"ext", "inv", "--spec", "eta:1", "t^0"});
  EXPECT_EQ(el.code, kUsage);
  EXPECT_NE(el.err.find("element :="), std::string::npos);
  EXPECT_EQ(call({"bogus"}).code, kUsage);
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"--p", "4", "series", "canon", "0"}).code, kUsage);
  EXPECT_EQ(call({"fingerprint", "--spec", "eta:1"}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, FailedCheckExitsTwoWithWitnesses) {
  Result r = call({"cocycle", "equivariance", "--control", "ring-mul", "--samples", "20"});
  EXPECT_EQ(r.code, kVerifyFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("witness: ["), std::string::npos) << r.out;
  // The Cauchy product is biadditive, so the cocycle identity itself holds.
  EXPECT_EQ(call({"cocycle", "check", "--control", "ring-mul", "--samples", "20"}).code, kOk);
  EXPECT_EQ(call({"cocycle", "check", "--samples", "20"}).code, kUsage);
}

TEST(Cli, Selftest) {
  Result sel = call({"selftest", "--criterion", "8"});
  EXPECT_EQ(sel.code, kOk);
  EXPECT_EQ(sel.out.rfind("PASS  8", 0), 0u) << sel.out;
  EXPECT_EQ(call({"selftest", "--criterion", "11"}).code, kUsage);
}

}  // namespace
}  // namespace contraction::cli
