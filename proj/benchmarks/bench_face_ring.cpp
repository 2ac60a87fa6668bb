#include <benchmark/benchmark.h>

#include "facering/models.hpp"
#include "facering/oracle.hpp"
#include "support/support.hpp"

namespace {

using namespace facering;
namespace ft = facering::testing;

void BM_Hilbert(benchmark::State& state) {
  FaceComplex c = build_builtin("connected-sum").complex;
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Hilbert)->Arg(12)->Arg(40);

void BM_BruteHilbert(benchmark::State& state) {
  FaceComplex c = build_builtin("triangle").complex;
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_basis_hilbert(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteHilbert)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state) {
  FaceComplex c = build_builtin("square").complex;
  ft::Rng rng(ft::kSeed);
  RingElement a = ft::random_member(c, rng), b = ft::random_member(c, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(c, a, b));
}
BENCHMARK(BM_Multiply);

void BM_Decompose(benchmark::State& state) {
  FaceComplex c = build_builtin("square").complex;
  ft::Rng rng(ft::kSeed);
  RingElement a = multiply(c, ft::random_member(c, rng), ft::random_member(c, rng));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(c, a));
}
BENCHMARK(BM_Decompose);

void BM_NaiveMembership(benchmark::State& state) {
  FaceComplex c = build_builtin("square").complex;
  ft::Rng rng(ft::kSeed);
  RingElement a = multiply(c, ft::random_member(c, rng), ft::random_member(c, rng));
  for (auto _ : state) benchmark::DoNotOptimize(naive_membership(c, a));
}
BENCHMARK(BM_NaiveMembership)->Unit(benchmark::kMillisecond);

void BM_ValidateComplex(benchmark::State& state) {
  FaceComplex c = build_builtin("square").complex;
  for (auto _ : state) benchmark::DoNotOptimize(validate_complex(c));
}
BENCHMARK(BM_ValidateComplex);

}  // namespace

BENCHMARK_MAIN();
