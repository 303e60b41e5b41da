#include "ramapi/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ramapi/errors.hpp"
#include "ramapi/polynomial.hpp"

namespace ramapi {

std::string AlgValue::str(int digits) const {
    if (exact) return exact->str();
    std::string out = approx.re.str(digits);
    if (!approx.im.is_zero()) out += " + " + approx.im.str(digits) + "*i";
    return out;
}

namespace {

double rf_eval_d(const RationalFunctionQ& f, double x) {
    mpfr_prec_t prec = 64;
    BigComplex z(BigReal(mpq_class(0), prec), BigReal(prec));
    mpfr_set_d(z.re.raw(), x, MPFR_RNDN);
    try {
        return f.eval(z).re.to_double();
    } catch (const PoleAtPoint&) {
        return std::numeric_limits<double>::infinity();
    }
}

} // namespace

BigReal validate_transformation(Transformation& t, const PrecisionPolicy& p, int samples) {
    // Candidate real intervals with 0 < alpha, beta < 1 and m^2 > 0.  These
    // constraints alone admit spurious bands on other sheets of the modular
    // curve, so each run is screened against the identity itself before use.
    const int grid = 4096;
    const double lo = -4.0, hi = 4.0;
    std::vector<std::pair<double, double>> runs;
    double run_lo = 0;
    bool in_run = false;
    for (int i = 0; i <= grid; ++i) {
        double x = lo + (hi - lo) * i / grid;
        double a = rf_eval_d(t.alpha_of_x, x);
        double b = rf_eval_d(t.beta_of_x, x);
        double m2 = rf_eval_d(t.m_squared_of_x, x);
        bool ok = std::isfinite(a) && std::isfinite(b) && std::isfinite(m2) && a > 1e-9 &&
                  a < 1 - 1e-9 && b > 1e-9 && b < 1 - 1e-9 && m2 > 0;
        if (ok && !in_run) {
            in_run = true;
            run_lo = x;
        }
        if ((!ok || i == grid) && in_run) {
            in_run = false;
            runs.emplace_back(run_lo, x);
        }
    }
    std::sort(runs.begin(), runs.end(), [](const auto& a, const auto& b) {
        return a.second - a.first > b.second - b.first;
    });

    const PrecisionPolicy screen_pol(12, 10);
    double best_lo = 0, best_hi = 0;
    for (const auto& [rlo, rhi] : runs) {
        double mid = 0.5 * (rlo + rhi);
        BigComplex xz(screen_pol.working_bits());
        mpfr_set_d(xz.re.raw(), mid, MPFR_RNDN);
        try {
            BigComplex a = t.alpha_of_x.eval(xz);
            BigComplex b = t.beta_of_x.eval(xz);
            BigComplex m = sqrt(t.m_squared_of_x.eval(xz));
            HyperValue fa = eval_F(t.level, a, BranchPolicy{}, screen_pol);
            HyperValue fb = eval_F(t.level, b, BranchPolicy{}, screen_pol);
            if (abs(fa.f - m * fb.f) < BigReal::pow10(-8, screen_pol.working_bits())) {
                best_lo = rlo;
                best_hi = rhi;
                break;
            }
        } catch (const Error&) {
            continue;
        }
    }
    if (!(best_hi > best_lo))
        throw ValidationError("transformation '" + t.name +
                              "' has no real interval where F(alpha(x)) = m(x) F(beta(x))");
    // Shrink away from the endpoints before sampling.
    double pad = (best_hi - best_lo) * 0.1;
    t.x_lo = best_lo + pad;
    t.x_hi = best_hi - pad;

    const mpfr_prec_t prec = p.working_bits();
    BigReal worst(prec);
    for (int i = 0; i < samples; ++i) {
        double x = t.x_lo + (t.x_hi - t.x_lo) * (i + 0.5) / samples;
        BigComplex xz(prec);
        mpfr_set_d(xz.re.raw(), x, MPFR_RNDN);
        BigComplex a = t.alpha_of_x.eval(xz);
        BigComplex b = t.beta_of_x.eval(xz);
        BigComplex m = sqrt(t.m_squared_of_x.eval(xz));
        HyperValue fa = eval_F(t.level, a, BranchPolicy{}, p);
        HyperValue fb = eval_F(t.level, b, BranchPolicy{}, p);
        BigReal resid = abs(fa.f - m * fb.f);
        if (resid > worst) worst = resid;
    }
    return worst;
}

namespace {

BigComplex ratio_of_F(LevelParam lp, const BigComplex& alpha0, const BigComplex& beta0,
                      BranchPolicy bp, const PrecisionPolicy& p) {
    HyperValue fa = eval_F(lp, alpha0, bp, p);
    HyperValue fb = eval_F(lp, beta0, bp, p);
    return fa.f / fb.f;
}

} // namespace

std::vector<SolutionPoint> solve_beta_complement(const Transformation& t, BranchPolicy bp,
                                                 const PrecisionPolicy& p) {
    const mpfr_prec_t prec = p.working_bits();
    RationalFunctionQ cond =
        t.beta_of_x + t.alpha_of_x - RationalFunctionQ(PolyQ(mpq_class(1)));
    if (cond.num().degree() < 1)
        throw NoSolutions("beta + alpha - 1 has no roots for '" + t.name + "'");

    RationalFunctionQ alpha_d = t.alpha_of_x.derivative();
    RationalFunctionQ beta_d = t.beta_of_x.derivative();
    RationalFunctionQ m2_d = t.m_squared_of_x.derivative();

    BigReal sel_tol = BigReal::pow10(-(p.target_digits / 2), prec);
    BigReal match_tol = BigReal::pow10(5 - p.target_digits, prec);
    BigComplex one(BigReal(1L, prec), BigReal(prec));

    std::vector<SolutionPoint> out;
    for (const RootBox& root : poly_roots(cond.num(), p)) {
        const BigComplex& x = root.value;
        // Poles of alpha or beta cannot be genuine solutions.
        BigComplex a0n, b0n;
        try {
            a0n = t.alpha_of_x.eval(x);
            b0n = t.beta_of_x.eval(x);
        } catch (const PoleAtPoint&) {
            continue;
        }
        if (abs(a0n) < sel_tol || abs(a0n - one) < sel_tol) continue;

        SolutionPoint sp;
        sp.d = t.degree_inverse;
        sp.level = t.level;

        // Try to certify the root as an exact surd: the recognized candidate
        // must be a structural zero of the cleared-numerator polynomial.
        std::optional<ComplexSurd> x0e = identify_complex(x, 64, 64, p);
        if (x0e && !cond.num().eval_exact(*x0e).is_zero()) x0e.reset();

        if (x0e) {
            sp.x0 = AlgValue::from_exact(*x0e, prec);
            ComplexSurd a0 = t.alpha_of_x.eval_exact(*x0e);
            ComplexSurd b0 = ComplexSurd(SurdExpr(1)) - a0;
            sp.alpha0 = AlgValue::from_exact(a0, prec);
            sp.beta0 = AlgValue::from_exact(b0, prec);
            sp.alpha0_prime = AlgValue::from_exact(alpha_d.eval_exact(*x0e), prec);
            sp.beta0_prime = AlgValue::from_exact(beta_d.eval_exact(*x0e), prec);
            ComplexSurd fourz = ComplexSurd(SurdExpr(4)) * a0 * b0;
            sp.z0 = AlgValue::from_exact(fourz, prec);
        } else {
            sp.x0 = AlgValue::from_numeric(x);
            sp.alpha0 = AlgValue::from_numeric(a0n);
            sp.beta0 = AlgValue::from_numeric(one - a0n);
            sp.alpha0_prime = AlgValue::from_numeric(alpha_d.eval(x));
            sp.beta0_prime = AlgValue::from_numeric(beta_d.eval(x));
            sp.z0 = AlgValue::from_numeric(a0n * (one - a0n) * BigReal(4L, prec));
        }

        // Multiplier: sign of sqrt(m^2(x0)) resolved against the directly
        // computed hypergeometric ratio under the requested branch.
        BigComplex ratio = ratio_of_F(t.level, sp.alpha0.approx, sp.beta0.approx, bp, p);
        std::optional<ComplexSurd> m0e;
        if (x0e) {
            ComplexSurd m2v = t.m_squared_of_x.eval_exact(*x0e);
            m0e = m2v.sqrt_exact();
        }
        if (m0e) {
            BigComplex cand = m0e->eval(prec);
            if (abs(cand - ratio) > abs(cand + ratio)) *m0e = -*m0e;
            sp.m0 = AlgValue::from_exact(*m0e, prec);
        } else {
            BigComplex cand = sqrt(t.m_squared_of_x.eval(x));
            if (abs(cand - ratio) > abs(cand + ratio)) cand = -cand;
            sp.m0 = AlgValue::from_numeric(cand);
        }
        sp.branch_consistent =
            abs(sp.m0.approx - ratio) < match_tol * max(abs(ratio), BigReal(1L, prec));

        // m0' = (m^2)'(x0) / (2 m0).
        bool mp_exact = false;
        if (x0e && sp.m0.exact) {
            try {
                ComplexSurd mp = m2_d.eval_exact(*x0e) /
                                 (ComplexSurd(SurdExpr(2)) * *sp.m0.exact);
                sp.m0_prime = AlgValue::from_exact(mp, prec);
                mp_exact = true;
            } catch (const UnsupportedRadicalDepth&) {
            }
        }
        if (!mp_exact)
            sp.m0_prime =
                AlgValue::from_numeric(m2_d.eval(x) / (sp.m0.approx * BigReal(2L, prec)));

        sp.all_exact = sp.x0.is_exact() && sp.alpha0.is_exact() && sp.m0.is_exact() &&
                       sp.m0_prime.is_exact();
        out.push_back(std::move(sp));
    }
    if (out.empty()) throw NoSolutions("all roots of beta + alpha - 1 were poles or degenerate");

    std::sort(out.begin(), out.end(), [](const SolutionPoint& a, const SolutionPoint& b) {
        if (a.z0.approx.re != b.z0.approx.re) return a.z0.approx.re < b.z0.approx.re;
        if (a.z0.approx.im != b.z0.approx.im) return a.z0.approx.im < b.z0.approx.im;
        if (a.x0.approx.re != b.x0.approx.re) return a.x0.approx.re < b.x0.approx.re;
        return a.x0.approx.im < b.x0.approx.im;
    });
    return out;
}

BigReal multiplier_check(const Transformation& t, const BigComplex& x, const PrecisionPolicy& p) {
    const mpfr_prec_t prec = p.working_bits();
    BigComplex one(BigReal(1L, prec), BigReal(prec));
    BigComplex a = t.alpha_of_x.eval(x);
    BigComplex b = t.beta_of_x.eval(x);
    BigReal tol = BigReal::pow10(-(p.target_digits / 2), prec);
    if (abs(a) < tol || abs(a - one) < tol || abs(b) < tol || abs(b - one) < tol)
        throw SingularArgument("multiplier formula needs alpha, beta outside {0, 1}");
    BigComplex ad = t.alpha_of_x.derivative().eval(x);
    BigComplex bd = t.beta_of_x.derivative().eval(x);
    BigComplex m_direct = sqrt(t.m_squared_of_x.eval(x));
    BigComplex inner = (b * (one - b)) / (a * (one - a)) * (ad / bd);
    BigComplex rhs = sqrt(inner) / sqrt(BigReal(long(t.degree_inverse), prec));
    bool real_band = x.im.is_zero() && a.im.is_zero() && b.im.is_zero() && a.re.sgn() > 0 &&
                     (one - a).re.sgn() > 0 && b.re.sgn() > 0 && (one - b).re.sgn() > 0;
    if (real_band) return abs(m_direct - rhs);
    return abs(abs(m_direct) - abs(rhs));
}

BigReal derivative_identity_check(const SolutionPoint& sp, const PrecisionPolicy& p) {
    const mpfr_prec_t prec = p.working_bits();
    BigComplex one(BigReal(1L, prec), BigReal(prec));
    BigComplex lhs = sp.beta0_prime.approx / sp.alpha0_prime.approx;
    BigComplex m0sq = sp.m0.approx * sp.m0.approx;
    BigComplex rhs = one / (m0sq * BigReal(long(sp.d), prec));
    return abs(lhs - rhs);
}

std::pair<AlgValue, AlgValue> g_transfer(const SolutionPoint& sp, const PrecisionPolicy& p) {
    const mpfr_prec_t prec = p.working_bits();
    if (sp.all_exact && sp.alpha0_prime.is_exact() && sp.beta0.is_exact() &&
        sp.beta0_prime.is_exact()) {
        try {
            ComplexSurd cf = *sp.alpha0.exact * *sp.m0_prime.exact / *sp.alpha0_prime.exact;
            ComplexSurd cg = *sp.alpha0.exact * (*sp.m0.exact / *sp.beta0.exact) *
                             (*sp.beta0_prime.exact / *sp.alpha0_prime.exact);
            return {AlgValue::from_exact(cf, prec), AlgValue::from_exact(cg, prec)};
        } catch (const UnsupportedRadicalDepth&) {
        }
    }
    BigComplex cf = sp.alpha0.approx * sp.m0_prime.approx / sp.alpha0_prime.approx;
    BigComplex cg = sp.alpha0.approx * (sp.m0.approx / sp.beta0.approx) *
                    (sp.beta0_prime.approx / sp.alpha0_prime.approx);
    return {AlgValue::from_numeric(cf), AlgValue::from_numeric(cg)};
}

} // namespace ramapi
