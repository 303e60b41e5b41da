#include "ramapi/series.hpp"

#include <cmath>

#include "ramapi/errors.hpp"

namespace ramapi {

void validate_series_spec(const SeriesSpec& spec) {
    if (spec.name.empty()) throw ValidationError("series needs a name");
    if (spec.z.is_zero()) throw ValidationError("series '" + spec.name + "': z must be nonzero");
    SurdExpr zp1 = spec.z + SurdExpr(1);
    SurdExpr onemz = SurdExpr(1) - spec.z;
    if (zp1.sign() < 0 || onemz.sign() < 0)
        throw ValidationError("series '" + spec.name + "': |z| must be <= 1");
    if (spec.z.sign() > 0 && onemz.sign() == 0)
        throw ValidationError("series '" + spec.name + "': z = 1 diverges");
    if (spec.d && *spec.d < 1)
        throw ValidationError("series '" + spec.name + "': degree must be positive");
}

AlgValue alpha_from_z(const SurdExpr& z, const PrecisionPolicy& p) {
    const mpfr_prec_t prec = p.working_bits();
    if ((SurdExpr(1) - z).sign() < 0) throw OutOfRange("alpha_from_z needs z <= 1");
    if (z.is_zero()) throw OutOfRange("alpha_from_z needs z != 0");
    SurdExpr onemz = SurdExpr(1) - z;
    if (auto root = onemz.sqrt_exact()) {
        SurdExpr alpha = (SurdExpr(1) - *root) / SurdExpr(2);
        return AlgValue::from_exact(ComplexSurd(alpha), prec);
    }
    BigReal r = sqrt(onemz.eval(prec));
    BigReal alpha = (BigReal(1L, prec) - r) / 2L;
    return AlgValue::from_numeric(BigComplex(alpha, BigReal(prec)));
}

namespace {

// Chebyshev-polynomial acceleration for alternating sums of positive terms,
// sum_k (-1)^k t_k.  `terms(k)` must return t_k at the given precision.
// Empirical error is recorded by comparing against a shorter run.
template <typename TermFn>
BigReal alternating_accelerate(long n, mpfr_prec_t prec, TermFn terms) {
    BigReal d(1L, prec);
    {
        BigReal base(3L, prec);
        base += sqrt(BigReal(8L, prec));
        d = pow_si(base, n);
        d = (d + BigReal(1L, prec) / d) / 2L;
    }
    BigReal b(-1L, prec), c = -d, s(prec);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        s += c * terms(k);
        // b_{k+1} = b_k (k+n)(k-n) / ((k+1/2)(k+1))
        BigReal num = BigReal(k + n, prec) * BigReal(k - n, prec);
        BigReal den = (BigReal(k, prec) + BigReal(mpq_class(1, 2), prec)) * BigReal(k + 1, prec);
        b = b * num / den;
    }
    return s / d;
}

struct TermStream {
    // u_n = T_n z^n where T is the Pochhammer kernel; f_n = u_n (a + b n).
    BigReal u, a, b, z, half, qa, qb;
    long n = 0;
    TermStream(const SeriesSpec& spec, mpfr_prec_t prec)
        : u(1L, prec),
          a(spec.a.eval(prec)),
          b(spec.b.eval(prec)),
          z(spec.z.eval(prec)),
          half(mpq_class(1, 2), prec),
          qa(mpq_class(1, static_cast<unsigned long>(spec.level.s)), prec),
          qb(BigReal(1L, prec) - qa) {}
    BigReal next() {
        BigReal f = u * (a + b * n);
        BigReal nn(n, u.prec());
        BigReal num = (nn + half) * (nn + qa) * (nn + qb);
        BigReal den = pow_si(nn + BigReal(1L, u.prec()), 3);
        u = u * z * (num / den);
        ++n;
        return f;
    }
};

} // namespace

SeriesValue evaluate_series(const SeriesSpec& spec, const PrecisionPolicy& p) {
    const int wd = p.working_digits();

    int zsign = spec.z.sign();
    SurdExpr absz = zsign < 0 ? -spec.z : spec.z;
    bool at_one = (SurdExpr(1) - absz).sign() == 0;
    if (at_one && zsign > 0) throw DivergentSeries("series diverges at z = 1");
    if ((SurdExpr(1) - absz).sign() < 0) throw DivergentSeries("series diverges for |z| > 1");
    validate_series_spec(spec);

    bool accelerate = false;
    if (zsign < 0) {
        // |z| > 0.9 or exactly 1: conditional or slow convergence.
        SurdExpr gap = SurdExpr(1) - absz;
        accelerate = at_one || (gap - SurdExpr(mpq_class(1, 10))).sign() < 0;
    }

    if (!accelerate) {
        const mpfr_prec_t prec = p.working_bits();
        BigReal zmag = absz.eval(prec);
        TermStream ts(spec, prec);
        BigReal sum(prec);
        BigReal eps = BigReal::pow10(-(wd + 5), prec);
        BigReal lastmag(prec);
        int quiet = 0;
        long n = 0;
        const long cap = 400L * wd + 2000;
        for (; n <= cap; ++n) {
            BigReal f = ts.next();
            sum += f;
            lastmag = abs(f);
            if (lastmag < eps) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
        if (n > cap) throw PrecisionLoss("series did not converge within the term cap");
        // ratio bound |z| (1 + b/(a+bn)); certified once below 1.
        BigReal an = ts.a + ts.b * ts.n;
        BigReal rho = zmag * (BigReal(1L, prec) + abs(ts.b) / abs(an));
        BigReal one(1L, prec);
        if (!(rho < one)) throw PrecisionLoss("tail ratio did not drop below 1");
        SeriesValue out{sum, lastmag * rho / (one - rho) + eps * 8L, n, false};
        return out;
    }

    // Alternating acceleration; the error model is the difference between two
    // run lengths plus the theoretical (3+sqrt 8)^-n decay.
    const int digits_goal = std::min(p.target_digits, 25) + 10;
    const long n_terms = static_cast<long>(digits_goal / 0.7655) + 12;
    const int internal_digits = digits_goal + static_cast<int>(n_terms * 0.7655) + 15;
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(internal_digits * 3.3219280948873623 + 16);

    SeriesSpec pos = spec;
    pos.z = absz; // stream of positive terms; signs handled by the scheme
    auto run = [&](long n) {
        TermStream ts(pos, prec);
        return alternating_accelerate(n, prec, [&](long) { return ts.next(); });
    };
    BigReal full = run(n_terms);
    BigReal shorter = run(n_terms - n_terms / 4);
    BigReal model = abs(full - shorter);
    BigReal theo = pow_si(BigReal(3L, prec) + sqrt(BigReal(8L, prec)), -n_terms) * 16L;
    SeriesValue out{full, max(model, theo), n_terms, true};
    return out;
}

BigReal verify_series(const SeriesSpec& spec, const PrecisionPolicy& p) {
    SeriesValue v = evaluate_series(spec, p);
    BigReal invpi = BigReal(1L, v.value.prec()) / BigReal::pi(v.value.prec());
    return abs(v.value - invpi);
}

BigReal series_pass_threshold(const SeriesSpec& spec, const PrecisionPolicy& p) {
    SurdExpr zp1 = spec.z + SurdExpr(1);
    if (zp1.sign() == 0) return BigReal::pow10(-std::min(p.target_digits, 25), p.working_bits());
    return BigReal::pow10(5 - p.target_digits, p.working_bits());
}

DerivedCoefficients derive_coefficients(const SolutionPoint& sp, const PrecisionPolicy& p) {
    const mpfr_prec_t prec = p.working_bits();
    const SurdExpr spis = sin_pi_over(sp.level.s);
    BigReal tol = BigReal::pow10(5 - p.target_digits, prec);

    // b/(1-2 alpha0) cancels to Re(m0) d / sin(pi/s), which keeps the
    // symmetric point alpha0 = 1/2 (b = 0) inside the formula's domain.
    if (sp.all_exact) {
        try {
            const ComplexSurd& m0 = *sp.m0.exact;
            const ComplexSurd& a0 = *sp.alpha0.exact;
            if (!a0.is_real())
                throw NonRealCoefficient("alpha0 must be real at a series solution point");
            SurdExpr one_m_2a = SurdExpr(1) - a0.re * SurdExpr(2);
            SurdExpr slope = m0.re * SurdExpr(sp.d) / spis;
            SurdExpr b = one_m_2a * slope;
            SurdExpr C = m0.im / m0.re;
            ComplexSurd one_p_Ci(SurdExpr(1), C);
            ComplexSurd ab = *sp.alpha0.exact * *sp.beta0.exact;
            ComplexSurd lhs = ab / *sp.alpha0_prime.exact;
            ComplexSurd mm = *sp.m0_prime.exact / m0;
            ComplexSurd a_full = -(one_p_Ci * lhs * mm * ComplexSurd(slope));
            if (!a_full.im.is_zero())
                throw NonRealCoefficient("imaginary part of a does not cancel exactly");
            DerivedCoefficients out;
            out.a = AlgValue::from_exact(ComplexSurd(a_full.re), prec);
            out.b = AlgValue::from_exact(ComplexSurd(b), prec);
            out.C = AlgValue::from_exact(ComplexSurd(C), prec);
            return out;
        } catch (const UnsupportedRadicalDepth&) {
            // fall through to the numeric route
        }
    }

    BigComplex m0 = sp.m0.approx;
    BigComplex a0 = sp.alpha0.approx;
    if (!(abs(a0.im) < tol))
        throw NonRealCoefficient("alpha0 must be real at a series solution point");
    BigReal one(1L, prec);
    BigReal one_m_2a = one - a0.re * 2L;
    BigReal slope = m0.re * long(sp.d) / spis.eval(prec);
    BigReal b = one_m_2a * slope;
    BigReal C = m0.im / m0.re;
    BigComplex one_p_Ci(one, C);
    BigComplex ab = sp.alpha0.approx * sp.beta0.approx;
    BigComplex a_full = -(one_p_Ci * (ab / sp.alpha0_prime.approx) * (sp.m0_prime.approx / m0) *
                          BigComplex(slope, BigReal(prec)));
    if (!(abs(a_full.im) < tol * max(one, abs(a_full.re))))
        throw NonRealCoefficient("imaginary part of a exceeds tolerance");
    DerivedCoefficients out;
    out.a = AlgValue::from_numeric(BigComplex(a_full.re, BigReal(prec)));
    out.b = AlgValue::from_numeric(BigComplex(b, BigReal(prec)));
    out.C = AlgValue::from_numeric(BigComplex(C, BigReal(prec)));
    return out;
}

ComplexSurd conjecture_m0(int d, LevelParam lp) {
    if (d < 1) throw ValidationError("conjectured multiplier needs d >= 1");
    if (4 * d < lp.ell) throw ValidationError("conjectured multiplier needs 4d >= level");
    mpq_class c(1, static_cast<unsigned long>(2 * d));
    SurdExpr re = (4 * d == lp.ell) ? SurdExpr()
                                    : SurdExpr::root_term(c, mpz_class(4 * d - lp.ell));
    SurdExpr im = SurdExpr::root_term(c, mpz_class(lp.ell));
    return {re, im};
}

ModularQ modular_q(const SeriesSpec& spec, const PrecisionPolicy& p) {
    if (!spec.d) throw MissingDegree("series '" + spec.name + "' has no degree");
    const mpfr_prec_t prec = p.working_bits();
    const int d = *spec.d;
    const int ell = spec.level.ell;
    int zsign = spec.z.sign();

    ModularQ out;
    out.r = mpq_class(d, static_cast<unsigned long>(ell));
    out.r.canonicalize();
    if (zsign < 0) out.r -= mpq_class(1, 4);

    BigReal sr = sqrt(BigReal(out.r, prec));
    out.q = exp(-(BigReal::pi(prec) * 2L * sr));
    if (zsign < 0) out.q = -out.q;

    // 4r = b^2 / (1-z), checked in exact surd arithmetic when possible.
    try {
        SurdExpr lhs(mpq_class(4) * out.r);
        SurdExpr rhs = (spec.b * spec.b) / (SurdExpr(1) - spec.z);
        out.surd_check_ran = true;
        out.surd_check_ok = (lhs == rhs);
    } catch (const UnsupportedRadicalDepth&) {
        out.surd_check_ran = false;
    }
    return out;
}

DegreeDetection detect_degree(LevelParam lp, const SurdExpr& z, int dmax, BranchPolicy bp,
                              const PrecisionPolicy& p) {
    if (z.is_zero()) throw OutOfRange("detect_degree needs z != 0");
    const mpfr_prec_t prec = p.working_bits();
    AlgValue a0 = alpha_from_z(z, p);
    BigComplex alpha0 = a0.approx;
    BigComplex beta0 = BigComplex(BigReal(1L, prec), BigReal(prec)) - alpha0;
    HyperValue fa = eval_F(lp, alpha0, bp, p);
    HyperValue fb = eval_F(lp, beta0, bp, p);
    BigReal modulus = abs(fa.f / fb.f);
    BigReal inv_d = BigReal(1L, prec) / (modulus * modulus);
    mpz_class d = inv_d.round_to_integer();
    BigReal err = abs(inv_d - BigReal(d, prec));
    if (d < 1 || d > dmax || !(err < BigReal::pow10(-20, prec) * BigReal(d, prec)))
        throw IdentificationFailed("|m0|^-2 = " + inv_d.str(25) +
                                   " is not an integer within tolerance");
    return {static_cast<int>(d.get_si()), modulus};
}

} // namespace ramapi
