#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "cohere/coherence.hpp"
#include "cohere/inference.hpp"
#include "cohere/oracle.hpp"

namespace {

using namespace cohere;

// A_i | H_i over 2n independent atoms, all at 1/2.
Assessment independent(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 1; i <= n; ++i) {
    atoms.push_back("A" + std::to_string(i));
    atoms.push_back("H" + std::to_string(i));
  }
  Context ctx(atoms);
  std::vector<ConditionalEvent> f;
  for (std::size_t i = 1; i <= n; ++i)
    f.emplace_back(ctx.atom("A" + std::to_string(i)), ctx.atom("H" + std::to_string(i)));
  return Assessment(ctx, f, std::vector<Rational>(n, Rational(1, 2)));
}

void BM_CheckCoherence(benchmark::State& state) {
  Assessment a = independent(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_coherence(a).coherent);
}
BENCHMARK(BM_CheckCoherence)->DenseRange(1, 5);

void BM_QuasiConjunctionInterval(benchmark::State& state) {
  Assessment a = independent(static_cast<std::size_t>(state.range(0)));
  ConditionalEvent target = quasi_conjunction(a.family());
  for (auto _ : state) benchmark::DoNotOptimize(extension_interval(a, target).interval.hi);
}
BENCHMARK(BM_QuasiConjunctionInterval)->DenseRange(2, 4);

void BM_OracleInterval(benchmark::State& state) {
  Assessment a = independent(2);
  ConditionalEvent target = quasi_conjunction(a.family());
  for (auto _ : state) benchmark::DoNotOptimize(oracle::extension_interval_bruteforce(a, target).hi);
}
BENCHMARK(BM_OracleInterval);

void BM_LoopEntails(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> sigma{n};
  for (std::size_t i = 1; i < n; ++i) sigma.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(loop_entails(n, sigma));
}
BENCHMARK(BM_LoopEntails)->DenseRange(3, 5);

}  // namespace

BENCHMARK_MAIN();
