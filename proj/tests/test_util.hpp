#ifndef RAMAPI_TEST_UTIL_HPP
#define RAMAPI_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "ramapi/bigfloat.hpp"
#include "ramapi/surd.hpp"

namespace testutil {

using namespace ramapi;

inline PrecisionPolicy policy() { return PrecisionPolicy(50, 20); }

// Independent square-root oracle: floor(sqrt(n * 10^(2*digits))) / 10^digits
// as an exact rational, via integer square root only.
inline mpq_class oracle_sqrt(const mpz_class& n, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = n * scale * scale;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return mpq_class(root) / mpq_class(scale);
}

inline BigReal tol(int e, mpfr_prec_t prec) { return BigReal::pow10(e, prec); }

// Random surd expressions over small squarefree radicands, reproducible.
class SurdGen {
public:
    explicit SurdGen(unsigned seed) : rng_(seed) {}

    mpq_class rational() {
        std::uniform_int_distribution<long> num(-40, 40);
        std::uniform_int_distribution<long> den(1, 12);
        mpq_class q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    SurdExpr surd(int max_terms = 3) {
        static const long radicands[] = {1, 2, 3, 5, 6, 7, 10, 15};
        std::uniform_int_distribution<int> nterms(0, max_terms);
        SurdExpr e;
        int n = nterms(rng_);
        for (int i = 0; i < n; ++i) {
            std::uniform_int_distribution<size_t> pick(0, std::size(radicands) - 1);
            e = e + SurdExpr::root_term(rational(), mpz_class(radicands[pick(rng_)]));
        }
        return e;
    }

    // Nonzero surd restricted to radical rank <= 1 (safe divisor).
    SurdExpr divisor() {
        static const long radicands[] = {1, 2, 3, 5, 7};
        std::uniform_int_distribution<size_t> pick(0, std::size(radicands) - 1);
        for (;;) {
            SurdExpr e = SurdExpr(rational()) +
                         SurdExpr::root_term(rational(), mpz_class(radicands[pick(rng_)]));
            if (!e.is_zero()) return e;
        }
    }

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(rng_);
    }

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

private:
    std::mt19937 rng_;
};

inline BigComplex complex_of(double re, double im, mpfr_prec_t prec) {
    BigComplex z(prec);
    mpfr_set_d(z.re.raw(), re, MPFR_RNDN);
    mpfr_set_d(z.im.raw(), im, MPFR_RNDN);
    return z;
}

} // namespace testutil

#endif
