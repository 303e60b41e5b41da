#ifndef RAMAPI_SURD_HPP
#define RAMAPI_SURD_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "ramapi/bigfloat.hpp"
#include "ramapi/errors.hpp"
#include "ramapi/precision.hpp"

namespace ramapi {

// n = square_root^2 * radicand with radicand squarefree.  Fails (nullopt) when
// trial division up to the bound cannot finish the factorization.
struct SquarefreeParts {
    mpz_class square_root;
    mpz_class radicand;
};
std::optional<SquarefreeParts> squarefree_decompose(const mpz_class& n,
                                                    unsigned long trial_bound = 1000000);

// Exact element of a real quadratic-surd ring: a finite sum
//   sum_k c_k * sqrt(k)
// over squarefree positive integers k with rational coefficients c_k.
// The key k = 1 is the rational part.  The representation is canonical
// (no zero coefficients, all radicands squarefree), so structural equality
// is mathematical equality.
class SurdExpr {
public:
    using TermMap = std::map<mpz_class, mpq_class>;

    SurdExpr() = default;
    SurdExpr(long n) { set_term(1, mpq_class(n)); }
    SurdExpr(const mpq_class& q) { set_term(1, q); }
    // c * sqrt(n) for any positive integer n; n is reduced to squarefree form.
    static SurdExpr root_term(const mpq_class& c, const mpz_class& n);

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_rational() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 1); }
    mpq_class rational_part() const {
        auto it = t_.find(mpz_class(1));
        return it == t_.end() ? mpq_class(0) : it->second;
    }
    // Coefficient of sqrt(k); zero if absent.
    mpq_class coeff(const mpz_class& k) const {
        auto it = t_.find(k);
        return it == t_.end() ? mpq_class(0) : it->second;
    }

    friend SurdExpr operator+(const SurdExpr& a, const SurdExpr& b);
    friend SurdExpr operator-(const SurdExpr& a, const SurdExpr& b);
    friend SurdExpr operator*(const SurdExpr& a, const SurdExpr& b);
    friend SurdExpr operator/(const SurdExpr& a, const SurdExpr& b);
    friend SurdExpr operator-(const SurdExpr& a);
    friend bool operator==(const SurdExpr& a, const SurdExpr& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SurdExpr& a, const SurdExpr& b) { return !(a.t_ == b.t_); }
    bool operator<(const SurdExpr& o) const { return t_ < o.t_; } // arbitrary stable order

    // Exact sign (-1, 0, +1), by recursive conjugate squaring; no rounding.
    int sign() const;

    BigReal eval(mpfr_prec_t prec) const;

    // Exact square root when one exists in the surd ring (rational radicands,
    // single-radical denesting); nullopt otherwise.  Requires *this >= 0.
    std::optional<SurdExpr> sqrt_exact() const;

    std::string str() const;

private:
    // Raw two-argument mpq_class constructions are not canonical; normalize
    // on entry so structural equality stays mathematical equality.
    static mpq_class canon(const mpq_class& c) {
        mpq_class cc = c;
        cc.canonicalize();
        return cc;
    }
    void set_term(const mpz_class& k, const mpq_class& c) {
        mpq_class cc = canon(c);
        if (cc != 0) t_[k] = cc;
    }
    void add_term(const mpz_class& k, const mpq_class& c) {
        mpq_class cc = canon(c);
        if (cc == 0) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, cc);
        } else {
            it->second += cc;
            if (it->second == 0) t_.erase(it);
        }
    }
    TermMap t_;
};

enum class SurdOp { add, sub, mul, div };
SurdExpr surd_arith(const SurdExpr& lhs, const SurdExpr& rhs, SurdOp op);

// Complex variant: pair of real surd expressions.
struct ComplexSurd {
    SurdExpr re, im;

    ComplexSurd() = default;
    ComplexSurd(SurdExpr r) : re(std::move(r)) {}
    ComplexSurd(SurdExpr r, SurdExpr i) : re(std::move(r)), im(std::move(i)) {}
    ComplexSurd(long n) : re(n) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    friend ComplexSurd operator+(const ComplexSurd& a, const ComplexSurd& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexSurd operator-(const ComplexSurd& a, const ComplexSurd& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexSurd operator-(const ComplexSurd& a) { return {-a.re, -a.im}; }
    friend ComplexSurd operator*(const ComplexSurd& a, const ComplexSurd& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexSurd operator/(const ComplexSurd& a, const ComplexSurd& b);
    friend ComplexSurd conj(const ComplexSurd& a) { return {a.re, -a.im}; }
    friend bool operator==(const ComplexSurd& a, const ComplexSurd& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexSurd& a, const ComplexSurd& b) { return !(a == b); }

    // re^2 + im^2.
    SurdExpr norm() const { return re * re + im * im; }

    BigComplex eval(mpfr_prec_t prec) const { return {re.eval(prec), im.eval(prec)}; }

    // Exact square root in the complex surd ring, principal branch
    // (nonnegative real part; for negative reals, +i direction).
    std::optional<ComplexSurd> sqrt_exact() const;

    std::string str() const;
};

// Spec-facing evaluation entry point: value correct to p.target_digits.
BigComplex surd_eval(const ComplexSurd& e, const PrecisionPolicy& p);
BigReal surd_eval(const SurdExpr& e, const PrecisionPolicy& p);

// ---- literal grammar ----
// integers, rationals p/q, sqrt(n), i, + - * /, parentheses.  Exact; no
// floating literals.  Example: 1/2-7/24*sqrt(3)
ComplexSurd parse_surd(const std::string& text);
// Parse a literal that must be real.
SurdExpr parse_real_surd(const std::string& text);

std::string to_string(const mpq_class& q);

// ---- constant recognition ----
// Simplest matching expression among: rational (continued fractions), single
// radical (p/q)*sqrt(k) (continued fractions on x^2), then two-term
// a + b*sqrt(k) by exhaustive search over small denominators and radicands.
// Match tolerance is 10^(5 - p.target_digits).
std::optional<SurdExpr> identify(const BigReal& x, long max_denominator, long max_radicand,
                                 const PrecisionPolicy& p);
std::optional<ComplexSurd> identify_complex(const BigComplex& z, long max_denominator,
                                            long max_radicand, const PrecisionPolicy& p);

// Best rational approximation with denominator <= max_denominator whose error
// is below tol; nullopt when the continued fraction offers no such convergent.
std::optional<mpq_class> rational_reconstruct(const BigReal& x, const mpz_class& max_denominator,
                                              const BigReal& tol);

} // namespace ramapi

#endif
