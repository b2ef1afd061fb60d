// Serial reference kernels against their OpenMP counterparts.

#include "hodge/polycore/e_polynomial.hpp"
#include "hodge/polycore/genus_polynomial.hpp"
#include "hodge/stratmaps/stratified_map.hpp"
#include "hodge/verify/random_inputs.hpp"

#include <benchmark/benchmark.h>

using namespace hodge;

namespace {

GenusPolynomial dense_random(random::Rng& rng, int terms) {
  GenusPolynomial p;
  for (int e = 0; e < terms; ++e) {
    Integer c = random::uniform(rng, -1000000, 1000000);
    c *= c;  // wide coefficients make the GMP work dominate
    p += GenusPolynomial::monomial(c, e);
  }
  return p;
}

void BM_GenusMultiplySerial(benchmark::State& state) {
  random::Rng rng(1);
  auto a = dense_random(rng, static_cast<int>(state.range(0)));
  auto b = dense_random(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_GenusMultiplyParallel(benchmark::State& state) {
  random::Rng rng(1);
  auto a = dense_random(rng, static_cast<int>(state.range(0)));
  auto b = dense_random(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_parallel(a, b));
}

EPolynomial e_random(random::Rng& rng, int side) {
  EPolynomial e;
  for (int k = 0; k < side; ++k) {
    for (int l = 0; l < side; ++l) e += EPolynomial::monomial(random::uniform(rng, -50, 50), k, l);
  }
  return e;
}

void BM_EMultiplySerial(benchmark::State& state) {
  random::Rng rng(2);
  auto a = e_random(rng, static_cast<int>(state.range(0)));
  auto b = e_random(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_EMultiplyParallel(benchmark::State& state) {
  random::Rng rng(2);
  auto a = e_random(rng, static_cast<int>(state.range(0)));
  auto b = e_random(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

std::vector<StratifiedMapDescriptor> descriptors(int count) {
  random::Rng rng(3);
  std::vector<StratifiedMapDescriptor> out;
  for (int i = 0; i < count; ++i) {
    auto s = random::strata(rng, 8);
    out.push_back(StratifiedMapDescriptor::build(s.records, s.generic_id));
  }
  return out;
}

void BM_StrataSerial(benchmark::State& state) {
  auto ds = descriptors(64);
  for (auto _ : state) {
    for (const auto& d : ds) benchmark::DoNotOptimize(total_space_chi_c_serial(d));
  }
}

void BM_StrataParallel(benchmark::State& state) {
  auto ds = descriptors(64);
  for (auto _ : state) {
    for (const auto& d : ds) benchmark::DoNotOptimize(total_space_chi_c(d));
  }
}

}  // namespace

BENCHMARK(BM_GenusMultiplySerial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_GenusMultiplyParallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_EMultiplySerial)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_EMultiplyParallel)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_StrataSerial);
BENCHMARK(BM_StrataParallel);

BENCHMARK_MAIN();
