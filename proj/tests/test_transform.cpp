#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramapi/catalog.hpp"
#include "ramapi/transform.hpp"
#include "test_util.hpp"

using namespace ramapi;
using namespace testutil;

namespace {

Transformation degree5() {
    Transformation t;
    t.level = LevelParam::from_s(4);
    t.degree_inverse = 5;
    t.name = "modular-l2-d5";
    t.alpha_of_x = parse_rational_function("64*x^5*(1+x)/((1+4*x^2)*(1-2*x-4*x^2)^2)");
    t.beta_of_x = parse_rational_function("64*x*(1+x)^5/((1+4*x^2)*(1+22*x-4*x^2)^2)");
    t.m_squared_of_x = parse_rational_function("(1-2*x-4*x^2)/(1+22*x-4*x^2)");
    return t;
}

Transformation identity_transformation() {
    Transformation t;
    t.level = LevelParam::from_s(4);
    t.degree_inverse = 1;
    t.name = "identity";
    t.alpha_of_x = RationalFunctionQ(PolyQ::x());
    t.beta_of_x = RationalFunctionQ(PolyQ::x());
    t.m_squared_of_x = RationalFunctionQ(PolyQ(mpq_class(1)));
    return t;
}

const SolutionPoint* by_z(const std::vector<SolutionPoint>& pts, const SurdExpr& z) {
    for (const auto& sp : pts)
        if (sp.branch_consistent && sp.z0.is_exact() && *sp.z0.exact == ComplexSurd(z)) return &sp;
    return nullptr;
}

} // namespace

TEST_CASE("exact rational function values at the quadratic point") {
    ComplexSurd x0(parse_real_surd("(sqrt(5)-2)/2"));
    Transformation t = degree5();

    CHECK(t.alpha_of_x.eval_exact(x0) == parse_surd("1/2-2/9*sqrt(5)"));
    CHECK(t.beta_of_x.eval_exact(x0) == parse_surd("1/2+2/9*sqrt(5)"));
    CHECK(t.alpha_of_x.derivative().eval_exact(x0) == parse_surd("(sqrt(5)+2)/27"));
    CHECK(t.beta_of_x.derivative().eval_exact(x0) == parse_surd("(sqrt(5)+2)/27"));
    CHECK(t.m_squared_of_x.eval_exact(x0) == parse_surd("1/5"));
}

TEST_CASE("solution points of the degree-5 transformation") {
    auto pol = policy();
    Transformation t = degree5();
    auto pts = solve_beta_complement(t, BranchPolicy{}, pol);
    CHECK(pts.size() >= 6);

    SUBCASE("real point reproduces the exact values") {
        const SolutionPoint* sp = by_z(pts, parse_real_surd("1/81"));
        REQUIRE(sp);
        CHECK(sp->all_exact);
        CHECK(*sp->x0.exact == parse_surd("(sqrt(5)-2)/2"));
        CHECK(*sp->alpha0.exact == parse_surd("1/2-2/9*sqrt(5)"));
        CHECK(*sp->beta0.exact == parse_surd("1/2+2/9*sqrt(5)"));
        CHECK(*sp->m0.exact == parse_surd("1/sqrt(5)"));
        CHECK(*sp->alpha0_prime.exact == parse_surd("(sqrt(5)+2)/27"));
        CHECK(*sp->beta0_prime.exact == parse_surd("(sqrt(5)+2)/27"));
        CHECK(*sp->m0_prime.exact == parse_surd("(-8*sqrt(5)-16)/15"));

        auto [cf, cg] = g_transfer(*sp, pol);
        CHECK(*cf.exact == parse_surd("(16*sqrt(5)-36)/5"));
        CHECK(*cg.exact == parse_surd("(161*sqrt(5)-360)/5"));

        // beta0'/alpha0' = 1 = 1/(5 m0^2) exactly
        CHECK(*sp->beta0_prime.exact / *sp->alpha0_prime.exact == ComplexSurd(SurdExpr(1)));
        CHECK(derivative_identity_check(*sp, pol) < tol(-45, pol.working_bits()));
    }

    SUBCASE("complex point reproduces the exact values") {
        const SolutionPoint* sp = by_z(pts, parse_real_surd("-1/48"));
        REQUIRE(sp);
        CHECK(sp->all_exact);
        CHECK(*sp->x0.exact == parse_surd("(2*sqrt(3)-3)/4-(2-sqrt(3))/4*i"));
        CHECK(*sp->alpha0.exact == parse_surd("1/2-7/24*sqrt(3)"));
        CHECK(*sp->m0.exact == parse_surd("(3+i)*sqrt(2)/10"));
        CHECK(*sp->m0_prime.exact ==
              parse_surd("(-27/40*sqrt(2)-69/200*sqrt(6))-(33/200*sqrt(6)+9/40*sqrt(2))*i"));
        CHECK(*sp->alpha0_prime.exact ==
              parse_surd("(-23/240-sqrt(3)/16)-(sqrt(3)/48+11/240)*i"));
        CHECK(*sp->beta0_prime.exact == parse_surd("(-5/48-sqrt(3)/16)+(1/48+sqrt(3)/48)*i"));

        // |m0| = 1/sqrt(5)
        SurdExpr norm = sp->m0.exact->norm();
        CHECK(norm == parse_real_surd("1/5"));

        auto [cf, cg] = g_transfer(*sp, pol);
        CHECK(*cf.exact == parse_surd("-63/20*sqrt(2)+9/5*sqrt(6)"));
        CHECK(*cg.exact ==
              parse_surd("(-291/10*sqrt(2)+84/5*sqrt(6))+(-28/5*sqrt(6)+97/10*sqrt(2))*i"));

        CHECK(derivative_identity_check(*sp, pol) < tol(-45, pol.working_bits()));
    }

    SUBCASE("upper branch flips the complex point to its conjugate") {
        auto upper = solve_beta_complement(t, BranchPolicy{BranchSide::upper}, pol);
        const SolutionPoint* sp = by_z(upper, parse_real_surd("-1/48"));
        REQUIRE(sp);
        CHECK(*sp->m0.exact == conj(parse_surd("(3+i)*sqrt(2)/10")));
    }

    SUBCASE("every solution point satisfies |m0|^2 d = 1 and alpha0 + beta0 = 1") {
        mpfr_prec_t prec = pol.working_bits();
        for (const auto& sp : pts) {
            BigReal mm = norm(sp.m0.approx) * long(sp.d);
            CHECK(abs(mm - BigReal(1L, prec)) < tol(-45, prec));
            BigComplex s = sp.alpha0.approx + sp.beta0.approx;
            CHECK(abs(s - BigComplex(BigReal(1L, prec), BigReal(prec))) < tol(-45, prec));
            if (sp.alpha0.is_exact() && sp.beta0.is_exact())
                CHECK(*sp.alpha0.exact + *sp.beta0.exact == ComplexSurd(SurdExpr(1)));
            CHECK(derivative_identity_check(sp, pol) < tol(-45, prec));
        }
    }
}

TEST_CASE("identity transformation fixes alpha0 = beta0 = 1/2") {
    auto pol = policy();
    Transformation t = identity_transformation();
    auto pts = solve_beta_complement(t, BranchPolicy{}, pol);
    REQUIRE(pts.size() == 1);
    const SolutionPoint& sp = pts[0];
    CHECK(*sp.alpha0.exact == parse_surd("1/2"));
    CHECK(*sp.beta0.exact == parse_surd("1/2"));
    CHECK(*sp.m0.exact == parse_surd("1"));
    CHECK(*sp.m0_prime.exact == ComplexSurd());
    auto [cf, cg] = g_transfer(sp, pol);
    CHECK(*cf.exact == ComplexSurd());
    CHECK(*cg.exact == ComplexSurd(SurdExpr(1)));
    CHECK(derivative_identity_check(sp, pol).is_zero());
}

TEST_CASE("multiplier formula residuals") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    Transformation t = degree5();
    BigReal worst = validate_transformation(t, pol);
    CHECK(worst < tol(-45, prec));
    REQUIRE(t.x_hi > t.x_lo);

    CHECK(multiplier_check(t, complex_of(0.1, 0, prec), pol) < tol(-45, prec));

    SurdGen gen(8888);
    for (int i = 0; i < 10; ++i) {
        double x = gen.uniform(t.x_lo, t.x_hi);
        CHECK(multiplier_check(t, complex_of(x, 0, prec), pol) < tol(-45, prec));
    }

    // at the real solution point the formula recovers m0 = 1/sqrt(5)
    BigComplex x0(parse_real_surd("(sqrt(5)-2)/2").eval(prec), BigReal(prec));
    CHECK(multiplier_check(t, x0, pol) < tol(-45, prec));

    // at the complex point only the modulus is branch-free: |m0| = 1/sqrt(5)
    BigComplex xc = parse_surd("(2*sqrt(3)-3)/4-(2-sqrt(3))/4*i").eval(prec);
    CHECK(multiplier_check(t, xc, pol) < tol(-45, prec));
}

TEST_CASE("derivative of a constant rational function is zero") {
    RationalFunctionQ c = parse_rational_function("22/7");
    CHECK(c.derivative().num().is_zero());
}

TEST_CASE("a transformation whose condition vanishes identically has no solutions") {
    Transformation t;
    t.level = LevelParam::from_s(4);
    t.degree_inverse = 1;
    t.name = "complement";
    t.alpha_of_x = RationalFunctionQ(PolyQ::x());
    t.beta_of_x = parse_rational_function("1-x"); // beta + alpha - 1 == 0 everywhere
    t.m_squared_of_x = RationalFunctionQ(PolyQ(mpq_class(1)));
    CHECK_THROWS_AS(solve_beta_complement(t, BranchPolicy{}, policy()), NoSolutions);
}
