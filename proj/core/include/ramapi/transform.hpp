#ifndef RAMAPI_TRANSFORM_HPP
#define RAMAPI_TRANSFORM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramapi/hyper.hpp"
#include "ramapi/rational_function.hpp"
#include "ramapi/surd.hpp"

namespace ramapi {

// A value carried exactly as a surd whenever recognition succeeded, always
// with a working-precision numeric shadow.
struct AlgValue {
    std::optional<ComplexSurd> exact;
    BigComplex approx;

    bool is_exact() const { return exact.has_value(); }
    static AlgValue from_exact(ComplexSurd e, mpfr_prec_t prec) {
        AlgValue v;
        v.approx = e.eval(prec);
        v.exact = std::move(e);
        return v;
    }
    static AlgValue from_numeric(BigComplex z) {
        AlgValue v;
        v.approx = std::move(z);
        return v;
    }
    std::string str(int digits) const;
};

// Parametrized modular transformation F_s(alpha(x)) = m(x) F_s(beta(x)) of
// level `level.ell` and degree 1/d.  The multiplier is stored as m^2 (a
// rational function); m itself is its square root with the sign fixed per
// solution point.
struct Transformation {
    LevelParam level{4, 2};
    int degree_inverse = 1; // d
    RationalFunctionQ alpha_of_x, beta_of_x, m_squared_of_x;
    std::string name;
    // Real x-interval on which 0 < alpha, beta < 1 and m^2 > 0, detected at
    // load; empty (lo >= hi) when validation has not run.
    double x_lo = 0.0, x_hi = 0.0;
};

// Scans for the transformation's real working interval and checks
// F_s(alpha(x)) = m(x) F_s(beta(x)) numerically at `samples` points of it.
// Returns the worst residual; throws ValidationError when no interval exists.
BigReal validate_transformation(Transformation& t, const PrecisionPolicy& p, int samples = 3);

// One solution of beta(x) = 1 - alpha(x) with everything needed downstream:
// the point, the multiplier, and the x-derivatives.
struct SolutionPoint {
    AlgValue x0, alpha0, beta0, m0, alpha0_prime, beta0_prime, m0_prime;
    AlgValue z0; // 4 alpha0 (1-alpha0); selection key among multiple solutions
    int d = 1;
    LevelParam level{4, 2};
    // True when m0 agrees with F_s(alpha0)/F_s(beta0) under the branch policy
    // the point was solved with.
    bool branch_consistent = false;
    bool all_exact = false;
};

// Solves beta(x) + alpha(x) - 1 = 0: clears denominators, finds all roots,
// discards poles and alpha in {0,1}, recognizes coordinates as surds where
// possible, and resolves the sign of m0 = sqrt(m^2(x0)) against the
// hypergeometric ratio computed under `bp`.
std::vector<SolutionPoint> solve_beta_complement(const Transformation& t, BranchPolicy bp,
                                                 const PrecisionPolicy& p);

// Residual of the multiplier formula
//   m = (1/sqrt(d)) * ( beta(1-beta)/(alpha(1-alpha)) * alpha'/beta' )^(1/2)
// at the real point x; for non-real x the moduli are compared (the only
// branch-free part of the identity).
BigReal multiplier_check(const Transformation& t, const BigComplex& x, const PrecisionPolicy& p);

// | beta0'/alpha0' - 1/(d m0^2) |.
BigReal derivative_identity_check(const SolutionPoint& sp, const PrecisionPolicy& p);

// Coefficients of the G-transfer relation
//   G_s(alpha0) = cF * F_s(beta0) + cG * G_s(beta0)
// with cF = alpha0 m0'/alpha0' and cG = alpha0 (m0/beta0)(beta0'/alpha0').
std::pair<AlgValue, AlgValue> g_transfer(const SolutionPoint& sp, const PrecisionPolicy& p);

} // namespace ramapi

#endif
