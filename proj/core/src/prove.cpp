#include "ramapi/prove.hpp"

#include "ramapi/errors.hpp"

namespace ramapi {

namespace {

// Exact when both sides are exact surds, numeric comparison otherwise.
bool values_match(const AlgValue& got, const SurdExpr& want, const BigReal& tol,
                  mpfr_prec_t prec) {
    if (got.is_exact()) return *got.exact == ComplexSurd(want);
    BigComplex w(want.eval(prec), BigReal(prec));
    return abs(got.approx - w) < tol;
}

const SolutionPoint* select_point(const std::vector<SolutionPoint>& pts, const SurdExpr& z,
                                  const BigReal& tol, mpfr_prec_t prec) {
    BigComplex zv(z.eval(prec), BigReal(prec));
    const SolutionPoint* fallback = nullptr;
    for (const auto& sp : pts) {
        bool match = sp.z0.is_exact() ? (*sp.z0.exact == ComplexSurd(z))
                                      : (abs(sp.z0.approx - zv) < tol);
        if (!match) continue;
        if (sp.branch_consistent) return &sp;
        if (!fallback) fallback = &sp;
    }
    return fallback;
}

} // namespace

Certificate prove_series(const SeriesSpec& spec, const CatalogFile& catalog,
                         const PrecisionPolicy& p, const ProveOptions& opt) {
    const mpfr_prec_t prec = p.working_bits();
    BigReal tol = BigReal::pow10(5 - p.target_digits, prec);

    Certificate cert;
    cert.series = spec;
    cert.digits = p.target_digits;
    cert.guard_digits = p.guard_digits;
    cert.branch = opt.branch.side == BranchSide::lower ? "lower" : "upper";

    bool hard_failure = false;

    // (i) detect or confirm the degree.
    std::optional<int> d;
    try {
        DegreeDetection det = detect_degree(spec.level, spec.z, opt.dmax, opt.branch, p);
        cert.detected_d = det.d;
        d = det.d;
    } catch (const Error& e) {
        cert.notes.push_back(std::string("degree detection: ") + e.what());
    }
    if (spec.d) {
        if (cert.detected_d && *cert.detected_d != *spec.d) {
            cert.notes.push_back("degree hint d=" + std::to_string(*spec.d) +
                                 " disagrees with detected d=" +
                                 std::to_string(*cert.detected_d));
            hard_failure = true;
        }
        d = spec.d;
    }

    // (ii) transformation lookup, (iii)-(vi) the proof machinery.
    const Transformation* t = d ? catalog.find_transformation(spec.level.ell, *d) : nullptr;
    bool machinery_ok = false;
    if (t && !hard_failure) {
        cert.transformation_name = t->name;
        try {
            auto pts = solve_beta_complement(*t, opt.branch, p);
            const SolutionPoint* sp = select_point(pts, spec.z, tol, prec);
            if (!sp) {
                cert.notes.push_back("no solution point of '" + t->name + "' matches z");
            } else {
                cert.solution = *sp;
                if (!sp->branch_consistent)
                    cert.notes.push_back("selected point is not branch-consistent");

                cert.residuals.emplace_back("multiplier",
                                            multiplier_check(*t, sp->x0.approx, p));
                cert.residuals.emplace_back("derivative_identity",
                                            derivative_identity_check(*sp, p));

                HyperValue va = eval_F(spec.level, sp->alpha0.approx, opt.branch, p);
                HyperValue vb = eval_F(spec.level, sp->beta0.approx, opt.branch, p);
                auto [cf, cg] = g_transfer(*sp, p);
                cert.residuals.emplace_back(
                    "g_transfer", abs(va.g - cf.approx * vb.f - cg.approx * vb.g));

                DerivedCoefficients dc = derive_coefficients(*sp, p);
                cert.derived = dc;
                cert.coefficients_match = values_match(dc.a, spec.a, tol, prec) &&
                                          values_match(dc.b, spec.b, tol, prec);
                if (!cert.coefficients_match)
                    cert.notes.push_back("derived coefficients do not match the series");

                // (vi) Legendre reduction: with z = 4 alpha (1-alpha),
                // sum = a F^2 + b (z/z') d(F^2)/dalpha = a F^2 + 2b beta/(1-2alpha) F G
                // must equal 1/pi.
                BigComplex one(BigReal(1L, prec), BigReal(prec));
                BigComplex av(spec.a.eval(prec), BigReal(prec));
                BigComplex bv(spec.b.eval(prec), BigReal(prec));
                BigComplex weight =
                    sp->beta0.approx / (one - sp->alpha0.approx * BigReal(2L, prec));
                BigComplex reduced =
                    av * va.f * va.f + bv * weight * va.f * va.g * BigReal(2L, prec);
                BigReal invpi = BigReal(1L, prec) / BigReal::pi(prec);
                cert.residuals.emplace_back("legendre_reduction",
                                            abs(reduced - BigComplex(invpi, BigReal(prec))));

                // Clausen factorization residual at alpha0 (defined for |z| < 1).
                try {
                    cert.residuals.emplace_back(
                        "clausen", clausen_residual(spec.level, sp->alpha0.approx, p));
                } catch (const DivergentSeries&) {
                    cert.notes.push_back("clausen check skipped: |z| = 1");
                }
                machinery_ok = true;
            }
        } catch (const Error& e) {
            cert.notes.push_back(std::string("proof machinery: ") + e.what());
        }
    }

    // (vii) direct high-precision verification of the sum.
    bool sum_ok = false;
    try {
        BigReal final_sum = verify_series(spec, p);
        cert.residuals.emplace_back("final_sum", final_sum);
        sum_ok = final_sum < series_pass_threshold(spec, p);
        if (!sum_ok) cert.notes.push_back("series sum does not match 1/pi");
    } catch (const Error& e) {
        cert.notes.push_back(std::string("series evaluation: ") + e.what());
    }

    // (viii) modular q.
    if (d) {
        SeriesSpec with_d = spec;
        with_d.d = d;
        try {
            ModularQ mq = modular_q(with_d, p);
            cert.r = mq.r;
            cert.q = mq.q;
            if (mq.surd_check_ran && !mq.surd_check_ok) {
                cert.notes.push_back("4r = b^2/(1-z) fails in exact arithmetic");
                hard_failure = true;
            }
        } catch (const Error& e) {
            cert.notes.push_back(std::string("modular q: ") + e.what());
        }
    }

    // (ix) verdict.
    bool residuals_ok = true;
    for (const auto& [name, value] : cert.residuals) {
        if (name == "final_sum") continue;
        if (!(value < tol)) residuals_ok = false;
    }
    if (hard_failure) {
        cert.verdict = Verdict::FAILED;
    } else if (machinery_ok && residuals_ok && cert.coefficients_match && sum_ok) {
        cert.verdict = Verdict::PROVEN_NUMERIC;
    } else if (!cert.solution && sum_ok) {
        // No usable transformation machinery; the direct sum still checks out.
        cert.verdict = Verdict::VERIFIED_ONLY;
    } else {
        cert.verdict = Verdict::FAILED;
    }
    return cert;
}

} // namespace ramapi
