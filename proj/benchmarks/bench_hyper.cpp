#include <benchmark/benchmark.h>

#include "ramapi/hyper.hpp"

using namespace ramapi;

// direct series region
static void BM_EvalF_Direct(benchmark::State& state) {
    PrecisionPolicy pol(static_cast<int>(state.range(0)), 20);
    mpfr_prec_t prec = pol.working_bits();
    BigComplex a(BigReal(mpq_class(1, 3), prec), BigReal(prec));
    LevelParam lp = LevelParam::from_s(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_F(lp, a, {}, pol));
    }
}
BENCHMARK(BM_EvalF_Direct)->Arg(50)->Arg(100)->Arg(200);

// continuation past the cut (beta0 of the alternating degree-5 point)
static void BM_EvalF_Continued(benchmark::State& state) {
    PrecisionPolicy pol(static_cast<int>(state.range(0)), 20);
    mpfr_prec_t prec = pol.working_bits();
    BigComplex b(parse_real_surd("1/2+7/24*sqrt(3)").eval(prec), BigReal(prec));
    LevelParam lp = LevelParam::from_s(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_F(lp, b, {}, pol));
    }
}
BENCHMARK(BM_EvalF_Continued)->Arg(50)->Arg(100);

static void BM_Legendre(benchmark::State& state) {
    PrecisionPolicy pol(50, 20);
    mpfr_prec_t prec = pol.working_bits();
    BigComplex a(BigReal(mpq_class(3, 10), prec), BigReal(prec));
    LevelParam lp = LevelParam::from_s(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(legendre_residual(lp, a, {}, pol));
    }
}
BENCHMARK(BM_Legendre);
