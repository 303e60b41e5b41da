#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramapi/polynomial.hpp"
#include "ramapi/rational_function.hpp"
#include "test_util.hpp"

using namespace ramapi;
using namespace testutil;

TEST_CASE("polynomial arithmetic, division and gcd") {
    PolyQ x = PolyQ::x();
    PolyQ p = x * x - PolyQ(mpq_class(2));
    CHECK(p.degree() == 2);
    CHECK(p.eval(mpq_class(3)) == 7);

    auto [q, r] = (p * p).divmod(p);
    CHECK(q == p);
    CHECK(r.is_zero());

    PolyQ a = (x - PolyQ(mpq_class(1))) * (x + PolyQ(mpq_class(2)));
    PolyQ b = (x - PolyQ(mpq_class(1))) * (x - PolyQ(mpq_class(3)));
    CHECK(gcd(a, b) == (x - PolyQ(mpq_class(1))));

    CHECK(PolyQ(mpq_class(5)).derivative().is_zero());
    CHECK((x * x * x).derivative() == PolyQ(std::vector<mpq_class>{0, 0, 3}));
}

TEST_CASE("squarefree factorization reports multiplicities") {
    PolyQ x = PolyQ::x();
    PolyQ p = (x - PolyQ(mpq_class(1))).pow(3) * (x + PolyQ(mpq_class(4))).pow(2) *
              (x - PolyQ(mpq_class(7)));
    auto factors = p.squarefree_factors();
    REQUIRE(factors.size() == 3);
    PolyQ rebuilt(mpq_class(1));
    for (const auto& [f, m] : factors) rebuilt = rebuilt * f.pow(static_cast<unsigned>(m));
    CHECK(rebuilt == p.monic());
}

TEST_CASE("roots of x^2 - 2") {
    auto pol = policy();
    PolyQ p(std::vector<mpq_class>{-2, 0, 1});
    auto roots = poly_roots(p, pol);
    REQUIRE(roots.size() == 2);
    BigReal s2 = sqrt(BigReal(2L, pol.working_bits()));
    CHECK(abs(roots[0].value.re + s2) < tol(-50, pol.working_bits()));
    CHECK(abs(roots[1].value.re - s2) < tol(-50, pol.working_bits()));
    CHECK(abs(roots[0].value.im) < tol(-50, pol.working_bits()));
}

TEST_CASE("roots of 4x^2 + 4x - 1 against the quadratic formula") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    PolyQ p(std::vector<mpq_class>{-1, 4, 4});
    auto roots = poly_roots(p, pol);
    REQUIRE(roots.size() == 2);
    // (-1 +- sqrt(2))/2 from the formula, sqrt by mpfr directly
    BigReal s2 = sqrt(BigReal(2L, prec));
    BigReal lo = (-BigReal(1L, prec) - s2) / 2L;
    BigReal hi = (-BigReal(1L, prec) + s2) / 2L;
    CHECK(abs(roots[0].value.re - lo) < tol(-50, prec));
    CHECK(abs(roots[1].value.re - hi) < tol(-50, prec));
}

TEST_CASE("multiple roots carry multiplicities") {
    auto pol = policy();
    PolyQ x = PolyQ::x();
    PolyQ p = (x - PolyQ(mpq_class(2))).pow(2) * (x + PolyQ(mpq_class(1)));
    auto roots = poly_roots(p, pol);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 1); // x = -1
    CHECK(roots[1].multiplicity == 2); // x = 2
    CHECK(abs(roots[1].value.re - BigReal(2L, pol.working_bits())) <
          tol(-49, pol.working_bits()));
}

TEST_CASE("random polynomials reconstruct from their roots") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    SurdGen gen(97531);
    for (int trial = 0; trial < 8; ++trial) {
        int deg = static_cast<int>(gen.integer(2, 9));
        std::vector<mpq_class> coeffs;
        for (int i = 0; i < deg; ++i) coeffs.push_back(gen.rational());
        coeffs.push_back(mpq_class(1)); // monic
        PolyQ p(coeffs);
        if (p.degree() != deg) continue;
        auto roots = poly_roots(p, pol);
        int count = 0;
        for (const auto& r : roots) count += r.multiplicity;
        CHECK(count == deg);

        // expand prod (x - r_i) and compare coefficients
        std::vector<BigComplex> expanded{BigComplex(BigReal(1L, prec), BigReal(prec))};
        for (const auto& r : roots) {
            for (int m = 0; m < r.multiplicity; ++m) {
                std::vector<BigComplex> next(expanded.size() + 1, BigComplex(prec));
                for (size_t i = 0; i < expanded.size(); ++i) {
                    next[i + 1] = next[i + 1] + expanded[i];
                    next[i] = next[i] - expanded[i] * r.value;
                }
                expanded = std::move(next);
            }
        }
        for (int i = 0; i <= deg; ++i) {
            BigComplex want(BigReal(p.coeff(i), prec), BigReal(prec));
            CHECK(abs(expanded[static_cast<size_t>(i)] - want) < tol(-45, prec));
        }
    }
}

TEST_CASE("poly_roots rejects constants") {
    CHECK_THROWS_AS(poly_roots(PolyQ(mpq_class(3)), policy()), ValidationError);
}

TEST_CASE("rational function normalization and evaluation") {
    RationalFunctionQ f = parse_rational_function("(x^2-1)/(x-1)");
    CHECK(f.num() == (PolyQ::x() + PolyQ(mpq_class(1)))); // reduced
    CHECK(f.den().degree() == 0);

    RationalFunctionQ g = parse_rational_function("64*x^5*(1+x)/((1+4*x^2)*(1-2*x-4*x^2)^2)");
    CHECK(g.num().degree() == 6);
    CHECK(g.den().degree() == 6);

    // derivative of a constant is zero
    CHECK(parse_rational_function("7/3").derivative().num().is_zero());

    // exact pole detection
    ComplexSurd one(SurdExpr(1));
    CHECK_THROWS_AS(parse_rational_function("x/(x-1)").eval_exact(one), PoleAtPoint);

    // parse round trip through the canonical printer
    CHECK(parse_rational_function(g.str()) == g);
    CHECK_THROWS_AS(parse_rational_function("x^2 +"), ParseError);
    CHECK_THROWS_AS(parse_rational_function("1.5*x"), ParseError);
}

TEST_CASE("quotient rule") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    RationalFunctionQ f = parse_rational_function("(x^3-2*x)/(1+x^2)");
    RationalFunctionQ df = f.derivative();
    BigComplex x0 = complex_of(0.7, -0.2, prec);
    BigReal h = tol(-25, prec);
    BigComplex xp(x0.re + h, x0.im);
    BigComplex xm(x0.re - h, x0.im);
    BigComplex fd = (f.eval(xp) - f.eval(xm)) / BigComplex(h * 2L, BigReal(prec));
    CHECK(abs(df.eval(x0) - fd) < tol(-20, prec));
}
