#ifndef RAMAPI_HYPER_HPP
#define RAMAPI_HYPER_HPP

#include <vector>

#include "ramapi/bigfloat.hpp"
#include "ramapi/precision.hpp"
#include "ramapi/surd.hpp"

namespace ramapi {

// s in {2,3,4,6} with the level ell = 4 sin^2(pi/s), i.e. (s,ell) in
// {(2,4),(3,3),(4,2),(6,1)}.
struct LevelParam {
    int s;
    int ell;

    static LevelParam from_s(int s);
    static LevelParam from_ell(int ell);
};

// Side of the real axis from which arguments on the cut [1, inf) are
// approached during analytic continuation.
enum class BranchSide { lower, upper };
struct BranchPolicy {
    BranchSide side = BranchSide::lower;
};

// F = F_s(alpha) = 2F1(1/s, 1-1/s; 1; alpha), G = alpha * dF/dalpha.
struct HyperValue {
    BigComplex f;
    BigComplex g;
    BigReal err_bound;
};

// Joint evaluation of F_s and G_s anywhere off the singular point alpha = 1.
// Inside |alpha| <= 1/2 the defining power series is summed with a certified
// geometric tail; elsewhere the solution vector (F, F') of the hypergeometric
// ODE is continued along a polyline of Taylor disks avoiding 0 and 1.
HyperValue eval_F(LevelParam lp, const BigComplex& alpha, BranchPolicy bp,
                  const PrecisionPolicy& p);

// Continuation along a caller-supplied polyline: the first waypoint must sit
// inside |alpha| <= 1/2 (series base), the last is the evaluation point, and
// no segment may pass through 0 or 1.  Together with eval_F this exercises
// path independence of the continuation.
HyperValue eval_F_via(LevelParam lp, const std::vector<BigComplex>& waypoints,
                      const PrecisionPolicy& p);

// | alpha F(alpha) G(beta) + beta F(beta) G(alpha) - sin(pi/s)/pi |,
// beta = 1 - alpha.
BigReal legendre_residual(LevelParam lp, const BigComplex& alpha, BranchPolicy bp,
                          const PrecisionPolicy& p);

// | sum_n ((1/2)_n (1/s)_n (1-1/s)_n / (1)_n^3) z^n - F_s(alpha)^2 | with
// z = 4 alpha (1-alpha); DivergentSeries when |z| >= 1.
BigReal clausen_residual(LevelParam lp, const BigComplex& alpha, const PrecisionPolicy& p);

// sin(pi/s) for s in {2,3,4,6}, exactly: 1, sqrt(3)/2, sqrt(2)/2, 1/2.
SurdExpr sin_pi_over(int s);

} // namespace ramapi

#endif
