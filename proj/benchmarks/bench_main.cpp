#include <benchmark/benchmark.h>

#include <random>

#include "dfadist/algebra.hpp"
#include "dfadist/distinguish.hpp"
#include "dfadist/reduction.hpp"
#include "dfadist/sat.hpp"

namespace {

using namespace dfadist;

Dfa random_dfa(std::mt19937& rng, std::size_t states) {
  const Alphabet sigma("ab");
  std::uniform_int_distribution<State> pick(0, static_cast<State>(states - 1));
  std::bernoulli_distribution coin(0.5);
  std::vector<State> delta(states * sigma.size());
  for (State& t : delta) t = pick(rng);
  std::vector<bool> accepting(states);
  for (std::size_t q = 0; q < states; ++q) accepting[q] = coin(rng);
  return Dfa(sigma, states, 0, std::move(accepting), std::move(delta));
}

void BM_Minimize(benchmark::State& state) {
  std::mt19937 rng(1);
  const Dfa d = random_dfa(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimize(d));
}
BENCHMARK(BM_Minimize)->RangeMultiplier(4)->Range(16, 1024);

void BM_Product(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dfa a = random_dfa(rng, n);
  const Dfa b = random_dfa(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b, BoolOp::Xor));
}
BENCHMARK(BM_Product)->RangeMultiplier(4)->Range(8, 128);

sat::CnfInstance random_3cnf(std::mt19937& rng, std::size_t vars) {
  sat::CnfInstance f{vars, {}};
  std::uniform_int_distribution<int> var(1, static_cast<int>(vars));
  std::bernoulli_distribution negate(0.5);
  const auto clauses = static_cast<std::size_t>(4.26 * static_cast<double>(vars));
  for (std::size_t i = 0; i < clauses; ++i) {
    sat::Clause c;
    for (int j = 0; j < 3; ++j) c.push_back(negate(rng) ? -var(rng) : var(rng));
    f.clauses.push_back(std::move(c));
  }
  return f;
}

void BM_SolveRandom3Cnf(benchmark::State& state) {
  std::mt19937 rng(3);
  const sat::CnfInstance f = random_3cnf(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sat::solve(f));
}
BENCHMARK(BM_SolveRandom3Cnf)->DenseRange(20, 60, 20);

void BM_EncodeReduction(benchmark::State& state) {
  const reduction::CnfFormula phi(sat::CnfInstance{2, {{1, 2}, {-1, -2}}});
  const Dfa plus = reduction::build_Lplus(phi);
  const Dfa minus = reduction::build_Lminus(2, 2);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_distinguishing(plus, minus, k, Orientation::First));
  }
}
BENCHMARK(BM_EncodeReduction)->DenseRange(2, 4);

void BM_SynthReductionXor(benchmark::State& state) {
  const reduction::CnfFormula phi(sat::CnfInstance{2, {{1, 2}, {-1, -2}}});
  const Dfa plus = reduction::build_Lplus(phi);
  const Dfa minus = reduction::build_Lminus(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(synth_min_distinguishing(plus, minus, 4));
}
BENCHMARK(BM_SynthReductionXor)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
