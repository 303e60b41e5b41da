#ifndef RAMAPI_SERIES_HPP
#define RAMAPI_SERIES_HPP

#include <optional>
#include <string>

#include "ramapi/hyper.hpp"
#include "ramapi/surd.hpp"
#include "ramapi/transform.hpp"

namespace ramapi {

// One series  sum_n ((1/2)_n (1/s)_n (1-1/s)_n / (1)_n^3) (a + b n) z^n = 1/pi
// with exact algebraic data.  All stored series use the "= 1/pi"
// normalization; display forms are scaled at ingestion.
struct SeriesSpec {
    LevelParam level{4, 2};
    SurdExpr z; // real, |z| <= 1, z != 0
    SurdExpr a, b;
    std::optional<int> d; // degree hint
    std::string name;
    std::string alias; // secondary lookup key, may be empty
};

// Checks the SeriesSpec invariants; throws ValidationError.
void validate_series_spec(const SeriesSpec& spec);

// alpha0 = (1 - sqrt(1-z))/2, the branch with alpha0 <= 1/2 (negative for
// z < 0); exact surd whenever sqrt(1-z) is expressible, else numeric.
AlgValue alpha_from_z(const SurdExpr& z, const PrecisionPolicy& p);

struct SeriesValue {
    BigReal value;
    BigReal tail_bound;
    long terms = 0;
    bool accelerated = false;
};

// Partial sum with certified geometric tail for |z| < 0.9; Chebyshev-based
// alternating-series acceleration for z <= -0.9 (required at z = -1, where
// convergence is only conditional).
SeriesValue evaluate_series(const SeriesSpec& spec, const PrecisionPolicy& p);

// |evaluate_series - 1/pi|.
BigReal verify_series(const SeriesSpec& spec, const PrecisionPolicy& p);

// PASS threshold for a row: 10^(5-target) in general, 10^-25 for the
// conditionally convergent z = -1 row.
BigReal series_pass_threshold(const SeriesSpec& spec, const PrecisionPolicy& p);

struct DerivedCoefficients {
    AlgValue a, b; // real; the imaginary part of a is checked, then dropped
    AlgValue C;    // Im(m0)/Re(m0)
};

// Explicit coefficient formulas from the solution point:
//   b = (1 - 2 alpha0) Re(m0) d / sin(pi/s),
//   a = -(1 + C i) (alpha0 beta0 / alpha0') (m0'/m0) b/(1 - 2 alpha0).
// NonRealCoefficient when the imaginary part of a fails to cancel.
DerivedCoefficients derive_coefficients(const SolutionPoint& sp, const PrecisionPolicy& p);

// Experimental multiplier form for alternating series:
//   sqrt(4d - l)/(2d) + (sqrt(l)/(2d)) i.
ComplexSurd conjecture_m0(int d, LevelParam lp);

struct ModularQ {
    mpq_class r;        // d/l for z > 0, d/l - 1/4 for z < 0
    BigReal q;          // e^(-2 pi sqrt r), negated for z < 0
    bool surd_check_ran = false;
    bool surd_check_ok = false; // 4r = b^2/(1-z) in exact surd arithmetic
};
ModularQ modular_q(const SeriesSpec& spec, const PrecisionPolicy& p);

struct DegreeDetection {
    int d;
    BigReal modulus; // |F_s(alpha0)/F_s(beta0)|, identified as 1/sqrt(d)
};

// Computes alpha0 from z, evaluates the hypergeometric ratio (continuation
// for z < 0) and identifies |m0|^2 as 1/d.
DegreeDetection detect_degree(LevelParam lp, const SurdExpr& z, int dmax, BranchPolicy bp,
                              const PrecisionPolicy& p);

} // namespace ramapi

#endif
