#include <benchmark/benchmark.h>

#include "ramapi/polynomial.hpp"
#include "ramapi/rational_function.hpp"

using namespace ramapi;

// the cleared numerator of beta + alpha - 1 for the shipped transformation
static PolyQ condition_poly() {
    RationalFunctionQ alpha =
        parse_rational_function("64*x^5*(1+x)/((1+4*x^2)*(1-2*x-4*x^2)^2)");
    RationalFunctionQ beta =
        parse_rational_function("64*x*(1+x)^5/((1+4*x^2)*(1+22*x-4*x^2)^2)");
    return (beta + alpha - RationalFunctionQ(PolyQ(mpq_class(1)))).num();
}

static void BM_PolyRootsDegree10(benchmark::State& state) {
    PrecisionPolicy pol(static_cast<int>(state.range(0)), 20);
    PolyQ p = condition_poly();
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_roots(p, pol));
    }
}
BENCHMARK(BM_PolyRootsDegree10)->Arg(50)->Arg(100);
