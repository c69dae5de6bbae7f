#include <benchmark/benchmark.h>

#include "negacantor/analysis.hpp"
#include "negacantor/codec.hpp"
#include "negacantor/evaluator.hpp"
#include "negacantor/probability.hpp"
#include "negacantor/rng.hpp"
#include "negacantor/selfaffine.hpp"
#include "negacantor/selftest.hpp"

using namespace negacantor;

static void BM_EncodeDecode(benchmark::State& state) {
  const Params ps = reference_salem();
  const std::uint64_t D = ps.radix_product(20).convert_to<std::uint64_t>();
  std::uint64_t t = 0;
  for (auto _ : state) {
    const Rat x(Int(uniform_below(D + 1, rng_stream(1, t++))), Int(D));
    benchmark::DoNotOptimize(decode(ps, encode(ps, x, 64)));
  }
}
BENCHMARK(BM_EncodeDecode);

static void BM_EvalCanonical(benchmark::State& state) {
  const Params ps = reference_salem();
  const NegaDigits x = encode(ps, Rat(987654321, 1 << 30), 64);
  for (auto _ : state) benchmark::DoNotOptimize(eval_digits(ps, x));
}
BENCHMARK(BM_EvalCanonical);

static void BM_EvalTolerance(benchmark::State& state) {
  const Params ps = reference_mixed3();
  const Rat tol(1, Int(1) << state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval(ps, Rat(1, 7), tol));
}
BENCHMARK(BM_EvalTolerance)->Arg(20)->Arg(40)->Arg(80);

static void BM_Quadrature(benchmark::State& state) {
  const Params ps = reference_salem();
  for (auto _ : state) benchmark::DoNotOptimize(integral_quadrature(ps, state.range(0)));
}
BENCHMARK(BM_Quadrature)->Arg(8)->Arg(12);

static void BM_GraphPoints(benchmark::State& state) {
  const Params ps = reference_mixed3();
  for (auto _ : state) benchmark::DoNotOptimize(graph_points(ps, state.range(0)));
}
BENCHMARK(BM_GraphPoints)->Arg(5)->Arg(7);

static void BM_Sampling(benchmark::State& state) {
  const Params ps = reference_salem();
  const EtaSampler s(ps, 30, 99);
  long i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(s.sample_at(i++));
}
BENCHMARK(BM_Sampling);

static void BM_QuotientSequences(benchmark::State& state) {
  const Params ps = reference_mixed3();
  const NegaDigits x0{{0, 2, 1}, NegaTail::LowHigh};
  for (auto _ : state) benchmark::DoNotOptimize(quotient_sequences(ps, x0, 12));
}
BENCHMARK(BM_QuotientSequences);

BENCHMARK_MAIN();
