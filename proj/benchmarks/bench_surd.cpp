#include <benchmark/benchmark.h>

#include "ramapi/surd.hpp"

using namespace ramapi;

static void BM_SurdMul(benchmark::State& state) {
    SurdExpr a = parse_real_surd("1/2-7/24*sqrt(3)+2/9*sqrt(5)");
    SurdExpr b = parse_real_surd("3-sqrt(5)+1/7*sqrt(15)");
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SurdMul);

static void BM_SurdDivTwoRadical(benchmark::State& state) {
    SurdExpr a = parse_real_surd("1+sqrt(6)");
    SurdExpr b = parse_real_surd("1+sqrt(2)+sqrt(3)+sqrt(6)");
    for (auto _ : state) {
        benchmark::DoNotOptimize(a / b);
    }
}
BENCHMARK(BM_SurdDivTwoRadical);

static void BM_Identify(benchmark::State& state) {
    PrecisionPolicy pol(50, 20);
    BigReal x = parse_real_surd("(sqrt(5)-2)/2").eval(pol.working_bits());
    for (auto _ : state) {
        benchmark::DoNotOptimize(identify(x, 60, 60, pol));
    }
}
BENCHMARK(BM_Identify);

BENCHMARK_MAIN();
