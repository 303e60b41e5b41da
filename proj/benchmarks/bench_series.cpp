#include <benchmark/benchmark.h>

#include "ramapi/catalog.hpp"

using namespace ramapi;

static const CatalogFile& catalog() {
    static CatalogFile cat = default_catalog(PrecisionPolicy(50, 20), false);
    return cat;
}

static void BM_VerifySeries(benchmark::State& state) {
    PrecisionPolicy pol(static_cast<int>(state.range(0)), 20);
    const SeriesSpec& s = *catalog().find_series("eq2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_series(s, pol));
    }
}
BENCHMARK(BM_VerifySeries)->Arg(50)->Arg(200);

static void BM_AlternatingAcceleration(benchmark::State& state) {
    PrecisionPolicy pol(50, 20);
    const SeriesSpec& s = *catalog().find_series("l4.d3.neg"); // z = -1
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_series(s, pol));
    }
}
BENCHMARK(BM_AlternatingAcceleration);

static void BM_DetectDegree(benchmark::State& state) {
    PrecisionPolicy pol(50, 20);
    SurdExpr z = parse_real_surd("-1/250000");
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_degree(LevelParam::from_s(3), z, 60, {}, pol));
    }
}
BENCHMARK(BM_DetectDegree);
