#include <cmath>
#include <optional>

#include "ramapi/surd.hpp"

namespace ramapi {

std::optional<mpq_class> rational_reconstruct(const BigReal& x, const mpz_class& max_denominator,
                                              const BigReal& tol) {
    mpfr_prec_t prec = x.prec();
    // Continued fraction convergents h_n/k_n of x.
    mpz_class h_prev(0), h(1), k_prev(1), k(0);
    BigReal rem = x;
    for (int it = 0; it < 200; ++it) {
        mpz_class a = rem.round_to_integer(); // floor would do; round is stabler at the end
        BigReal az(a, prec);
        // round() may overshoot by one; use floor semantics explicitly
        if (az > rem) {
            a -= 1;
            az = BigReal(a, prec);
        }
        mpz_class h_new = a * h + h_prev;
        mpz_class k_new = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_new;
        k = k_new;
        if (k > max_denominator) return std::nullopt;
        BigReal approx(mpq_class(h, k), prec);
        if (abs(x - approx) < tol) {
            mpq_class q(h, k);
            q.canonicalize();
            return q;
        }
        BigReal frac = rem - az;
        if (frac.is_zero()) return std::nullopt; // exact integer already handled above
        rem = BigReal(1L, prec) / frac;
    }
    return std::nullopt;
}

namespace {

bool matches(const BigReal& x, const SurdExpr& cand, const BigReal& tol) {
    return abs(x - cand.eval(x.prec())) < tol;
}

// Single radical (p/q)*sqrt(k): recognize x^2 as rational, then strip squares.
std::optional<SurdExpr> identify_single_radical(const BigReal& x, long max_denominator,
                                                long max_radicand, const BigReal& tol) {
    mpz_class maxd(max_denominator);
    // x^2 = p/q needs denominators up to maxden * max_radicand.
    auto sq = rational_reconstruct(x * x, maxd * maxd * mpz_class(max_radicand), tol);
    if (!sq || *sq < 0) return std::nullopt;
    auto root = SurdExpr(*sq).sqrt_exact();
    if (!root) return std::nullopt;
    SurdExpr cand = x.is_negative() ? -*root : *root;
    for (const auto& [k, c] : cand.terms()) {
        if (k > max_radicand) return std::nullopt;
        if (abs(c.get_den()) > max_denominator) return std::nullopt;
    }
    if (matches(x, cand, tol)) return cand;
    return std::nullopt;
}

// Two-term a + b*sqrt(k) by exhaustive search over a common denominator q and
// the radicand k:  q*x = p0 + p1*sqrt(k)  with integer p0, p1.
std::optional<SurdExpr> identify_two_term(const BigReal& x, long max_denominator,
                                          long max_radicand, const BigReal& tol) {
    mpfr_prec_t prec = x.prec();
    for (long k = 2; k <= max_radicand; ++k) {
        auto parts = squarefree_decompose(k);
        if (!parts || parts->radicand != k) continue; // only squarefree k
        BigReal rk = sqrt(BigReal(mpz_class(k), prec));
        for (long q = 1; q <= max_denominator; ++q) {
            BigReal t = x * q;
            // |p1| <= (|t| + slack)/sqrt(k) + slack
            long pmax = static_cast<long>((std::abs(t.to_double()) + 8.0) /
                                          std::sqrt(static_cast<double>(k))) + 8;
            for (long p1 = -pmax; p1 <= pmax; ++p1) {
                if (p1 == 0) continue;
                BigReal u = t - rk * p1;
                mpz_class p0 = u.round_to_integer();
                BigReal err = abs(u - BigReal(p0, prec));
                if (err < tol * q) {
                    SurdExpr cand = SurdExpr(mpq_class(p0, q)) +
                                    SurdExpr::root_term(mpq_class(p1, q), mpz_class(k));
                    if (matches(x, cand, tol)) return cand;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<SurdExpr> identify(const BigReal& x, long max_denominator, long max_radicand,
                                 const PrecisionPolicy& p) {
    BigReal tol = BigReal::pow10(5 - p.target_digits, x.prec());
    if (x.is_zero()) return SurdExpr();
    // rational first
    if (auto q = rational_reconstruct(x, mpz_class(max_denominator), tol)) return SurdExpr(*q);
    if (auto s = identify_single_radical(x, max_denominator, max_radicand, tol)) return s;
    if (auto s = identify_two_term(x, max_denominator, max_radicand, tol)) return s;
    return std::nullopt;
}

std::optional<ComplexSurd> identify_complex(const BigComplex& z, long max_denominator,
                                            long max_radicand, const PrecisionPolicy& p) {
    BigReal tol = BigReal::pow10(5 - p.target_digits, z.prec());
    SurdExpr re, im;
    if (abs(z.re) < tol) {
        re = SurdExpr();
    } else if (auto r = identify(z.re, max_denominator, max_radicand, p)) {
        re = *r;
    } else {
        return std::nullopt;
    }
    if (abs(z.im) < tol) {
        im = SurdExpr();
    } else if (auto i = identify(z.im, max_denominator, max_radicand, p)) {
        im = *i;
    } else {
        return std::nullopt;
    }
    return ComplexSurd(re, im);
}

} // namespace ramapi
