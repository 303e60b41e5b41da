#ifndef RAMAPI_RATIONAL_FUNCTION_HPP
#define RAMAPI_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>

#include "ramapi/polynomial.hpp"

namespace ramapi {

// Quotient of two exact polynomials, kept normalized: gcd(num, den) = 1 and
// den monic.
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_(mpq_class(1)) {}
    RationalFunctionQ(PolyQ num, PolyQ den);
    explicit RationalFunctionQ(PolyQ num) : num_(std::move(num)), den_(mpq_class(1)) {}

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Quotient-rule derivative, normalized.
    RationalFunctionQ derivative() const;

    // Numeric evaluation; PoleAtPoint when the denominator vanishes to within
    // working accuracy.
    BigComplex eval(const BigComplex& z) const;
    // Exact evaluation at a surd point; PoleAtPoint when the denominator is
    // structurally zero there.
    ComplexSurd eval_exact(const ComplexSurd& z) const;

    std::string str() const;

private:
    void normalize();
    PolyQ num_, den_;
};

// Parses the rational-function literal grammar: polynomials in `x` with
// rational coefficients, `^` powers, `* / + -` and parentheses, e.g.
//   64*x^5*(1+x)/((1+4*x^2)*(1-2*x-4*x^2)^2)
RationalFunctionQ parse_rational_function(const std::string& text);

} // namespace ramapi

#endif
