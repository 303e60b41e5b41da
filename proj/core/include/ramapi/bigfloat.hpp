#ifndef RAMAPI_BIGFLOAT_HPP
#define RAMAPI_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "ramapi/precision.hpp"

namespace ramapi {

// Immutable-by-convention arbitrary precision real.  Every value carries its
// own mpfr precision; binary operations work at the larger of the two.
// Rounding is to nearest everywhere, which keeps results deterministic.
class BigReal {
public:
    BigReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigReal(long n, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, n, MPFR_RNDN); }
    BigReal(const mpq_class& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigReal(const mpz_class& z, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }

    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_string(const std::string& s, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sgn() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Decimal string with `digits` significant digits, deterministic,
    // re-parseable by from_string.
    std::string str(int digits) const;

    // ---- arithmetic ----
    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(opprec(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(opprec(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(opprec(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(opprec(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r;
    }
    BigReal& operator+=(const BigReal& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend BigReal operator*(const BigReal& a, long n) {
        BigReal r(a.prec()); mpfr_mul_si(r.v_, a.v_, n, MPFR_RNDN); return r;
    }
    friend BigReal operator/(const BigReal& a, long n) {
        BigReal r(a.prec()); mpfr_div_si(r.v_, a.v_, n, MPFR_RNDN); return r;
    }
    friend BigReal operator+(const BigReal& a, long n) {
        BigReal r(a.prec()); mpfr_add_si(r.v_, a.v_, n, MPFR_RNDN); return r;
    }
    friend BigReal operator-(const BigReal& a, long n) {
        BigReal r(a.prec()); mpfr_sub_si(r.v_, a.v_, n, MPFR_RNDN); return r;
    }
    friend BigReal operator-(long n, const BigReal& a) {
        BigReal r(a.prec()); mpfr_si_sub(r.v_, n, a.v_, MPFR_RNDN); return r;
    }
    friend BigReal operator/(long n, const BigReal& a) {
        BigReal r(a.prec()); mpfr_si_div(r.v_, n, a.v_, MPFR_RNDN); return r;
    }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

    friend BigReal abs(const BigReal& a) {
        BigReal r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigReal sqrt(const BigReal& a) {
        BigReal r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigReal exp(const BigReal& a) {
        BigReal r(a.prec()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigReal log(const BigReal& a) {
        BigReal r(a.prec()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigReal hypot(const BigReal& a, const BigReal& b) {
        BigReal r(opprec(a, b)); mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigReal pow_si(const BigReal& a, long e) {
        BigReal r(a.prec()); mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN); return r;
    }
    friend BigReal min(const BigReal& a, const BigReal& b) { return a < b ? a : b; }
    friend BigReal max(const BigReal& a, const BigReal& b) { return a > b ? a : b; }

    // Nearest integer as exact mpz.
    mpz_class round_to_integer() const {
        mpfr_t t;
        mpfr_init2(t, prec());
        mpfr_round(t, v_);
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        return z;
    }

    static BigReal pi(mpfr_prec_t prec) {
        BigReal r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r;
    }
    // 10^e as a BigReal, handy for tolerances.
    static BigReal pow10(long e, mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_set_ui(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

private:
    static mpfr_prec_t opprec(const BigReal& a, const BigReal& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t v_;
};

// Complex value as an ordered pair of BigReal.
struct BigComplex {
    BigReal re, im;

    BigComplex() = default;
    explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(BigReal r) : re(std::move(r)), im(re.prec()) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigComplex& a, const BigReal& s) {
        return {a.re * s, a.im * s};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
        return {a.re / s, a.im / s};
    }
    friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
    friend BigReal abs(const BigComplex& a) { return hypot(a.re, a.im); }
    friend BigReal norm(const BigComplex& a) { return a.re * a.re + a.im * a.im; }

    // Principal square root (branch cut on the negative real axis).
    friend BigComplex sqrt(const BigComplex& a) {
        mpfr_prec_t p = a.prec();
        if (a.im.is_zero()) {
            if (!a.re.is_negative()) return BigComplex(sqrt(a.re), BigReal(p));
            return BigComplex(BigReal(p), sqrt(-a.re));
        }
        BigReal r = abs(a);
        BigReal u = sqrt((r + a.re) / 2L);
        BigReal v = sqrt((r - a.re) / 2L);
        if (a.im.is_negative()) v = -v;
        return {u, v};
    }

    friend BigComplex operator+(const BigComplex& a, long n) { return {a.re + n, a.im}; }
    friend BigComplex operator-(long n, const BigComplex& a) { return {n - a.re, -a.im}; }
    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

} // namespace ramapi

#endif
