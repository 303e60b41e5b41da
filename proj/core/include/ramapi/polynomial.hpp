#ifndef RAMAPI_POLYNOMIAL_HPP
#define RAMAPI_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ramapi/bigfloat.hpp"
#include "ramapi/errors.hpp"
#include "ramapi/precision.hpp"
#include "ramapi/surd.hpp"

namespace ramapi {

// Dense univariate polynomial with exact rational coefficients.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(mpq_class c) {
        c_.push_back(std::move(c));
        trim();
    }
    explicit PolyQ(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyQ x() { return PolyQ(std::vector<mpq_class>{0, 1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : mpq_class(0);
    }
    mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const mpq_class& s);
    friend PolyQ operator-(const PolyQ& a);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

    PolyQ derivative() const;
    PolyQ pow(unsigned e) const;

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& d) const;
    PolyQ monic() const;
    friend PolyQ gcd(const PolyQ& a, const PolyQ& b);

    // (factor, multiplicity) pairs with factors squarefree, monic, pairwise
    // coprime; product of factor^multiplicity equals monic(*this).
    std::vector<std::pair<PolyQ, int>> squarefree_factors() const;

    mpq_class eval(const mpq_class& v) const;
    BigComplex eval(const BigComplex& z) const;
    ComplexSurd eval_exact(const ComplexSurd& z) const;

    std::string str() const; // literal grammar: rationals, x, ^, * + -

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

// One complex root with a posteriori radius: the disk |z - value| <= radius
// contains a true root of the (squarefree factor of the) input.
struct RootBox {
    BigComplex value;
    BigReal radius;
    int multiplicity = 1;
};

// All complex roots via Aberth-Ehrlich simultaneous iteration on each
// squarefree factor, with Weierstrass-style error disks.
std::vector<RootBox> poly_roots(const PolyQ& poly, const PrecisionPolicy& p);

} // namespace ramapi

#endif
