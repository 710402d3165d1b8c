// Microbenchmarks for the hot paths: field arithmetic, the spectrum kernel
// and the exhaustive code evaluator.
#include <benchmark/benchmark.h>

#include "amdkit/amd.hpp"
#include "amdkit/derive.hpp"
#include "amdkit/spectrum.hpp"

using namespace amdkit;

static void BM_FieldMul(benchmark::State& state) {
  FieldPtr f = Field::make(2, std::uint32_t(state.range(0)));
  Idx a = f->generator();
  Idx b = f->pow(a, 7);
  for (auto _ : state) {
    b = f->mul(a, b) | 1;
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(12);

static void BM_FieldPow(benchmark::State& state) {
  FieldPtr f = Field::make(3, 4);
  Idx a = f->generator();
  std::uint64_t e = f->order() - 2;
  for (auto _ : state) {
    Idx v = f->pow(a, e);
    benchmark::DoNotOptimize(v);
    a = (a % (f->order() - 1)) + 1;
  }
}
BENCHMARK(BM_FieldPow);

static void BM_FieldMake(benchmark::State& state) {
  for (auto _ : state) {
    FieldPtr f = Field::make(2, std::uint32_t(state.range(0)));
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FieldMake)->Arg(8)->Arg(12)->Arg(16);

static void BM_SpectrumMax(benchmark::State& state) {
  Func f = mm_func(3, 2, Split::Strong);
  for (auto _ : state) {
    auto m = spectrum_max(f, false, unsigned(state.range(0)));
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_SpectrumMax)->Arg(1)->Arg(2);

static void BM_SpectrumMaxDillon(benchmark::State& state) {
  Func f = dillon_func(4, 1, std::nullopt, Split::Strong);
  for (auto _ : state) {
    auto m = spectrum_max(f, false, 1);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_SpectrumMaxDillon);

static void BM_Evaluate(benchmark::State& state) {
  AmdCode code = build_code(mm_func(3, 2, Split::Strong));
  for (auto _ : state) {
    SuccessProfile p = evaluate(code, ModelSet{}, unsigned(state.range(0)));
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Evaluate)->Arg(1)->Arg(2);

static void BM_ExtractFunction(benchmark::State& state) {
  AmdCode code = build_code(cdfpw_func(7, 2));
  for (auto _ : state) {
    Func fe = extract_function(code);
    benchmark::DoNotOptimize(fe);
  }
}
BENCHMARK(BM_ExtractFunction);

BENCHMARK_MAIN();
