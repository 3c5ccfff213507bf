#include <benchmark/benchmark.h>

#include "contraction/classify.hpp"
#include "contraction/extension.hpp"
#include "contraction/fingerprint.hpp"
#include "contraction/sampling.hpp"
#include "contraction/section.hpp"

namespace contraction {
namespace {

void BM_RingMul(benchmark::State& state) {
  Modulus ring(3, 2);
  Rng rng(1);
  const int len = static_cast<int>(state.range(0));
  Series x = random_series(rng, ring, 0, len), y = random_series(rng, ring, -2, len);
  for (auto _ : state) benchmark::DoNotOptimize(ring_mul(x, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RingMul)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_EvalEta(benchmark::State& state) {
  Modulus ring(2, 1);
  Rng rng(2);
  const int len = static_cast<int>(state.range(0));
  BitSeq s = BitSeq::parse(random_bits(rng, len, true).to_string() + "(0)");
  Series x = random_series(rng, ring, 0, len), y = random_series(rng, ring, 0, len);
  for (auto _ : state) benchmark::DoNotOptimize(eval_eta(s, x, y));
}
BENCHMARK(BM_EvalEta)->RangeMultiplier(4)->Range(16, 256);

void BM_ExtMul(benchmark::State& state) {
  Modulus ring(2, 1);
  Rng rng(3);
  SpecRef spec = share(CocycleSpec::eta(ring, BitSeq::parse("1011(0)")));
  ExtElement u(random_series(rng, ring, 0, 32), random_series(rng, ring, -4, 32), spec);
  ExtElement v(random_series(rng, ring, 0, 32), random_series(rng, ring, -4, 32), spec);
  for (auto _ : state) benchmark::DoNotOptimize(ext_mul(u, v));
}
BENCHMARK(BM_ExtMul);

void BM_RecoverBits(benchmark::State& state) {
  Modulus ring(2, 1);
  Rng rng(4);
  const int window = static_cast<int>(state.range(0));
  CocycleSpec spec = CocycleSpec::transformed(
      CocycleSpec::eta(ring, random_bits(rng, window, true)), random_unit(rng, ring, 1, 3),
      random_unit(rng, ring, -1, 3), random_quad_terms(rng, ring, 3, -4, 4));
  for (auto _ : state) benchmark::DoNotOptimize(recover_bits(delta_profile(spec, window)));
}
BENCHMARK(BM_RecoverBits)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildSection(benchmark::State& state) {
  Modulus ring(2, 1);
  Rng rng(5);
  ExtProjContext ctx =
      make_ext_projection_ctx(share(CocycleSpec::eta(ring, BitSeq::parse("101(0)"))));
  const int upto = static_cast<int>(state.range(0));
  Series h = random_series(rng, ring, -2, upto + 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_section(ctx, h, upto));
}
BENCHMARK(BM_BuildSection)->Arg(8)->Arg(24)->Arg(64);

void BM_SchurCohn(benchmark::State& state) {
  RationalPoly f = RationalPoly::parse("x^4 - 1/3*x^3 + 1/5*x^2 - 1/7*x + 1/11");
  for (auto _ : state) benchmark::DoNotOptimize(schur_cohn(f));
}
BENCHMARK(BM_SchurCohn);

}  // namespace
}  // namespace contraction

BENCHMARK_MAIN();
