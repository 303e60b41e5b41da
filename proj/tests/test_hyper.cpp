#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramapi/hyper.hpp"
#include "test_util.hpp"

using namespace ramapi;
using namespace testutil;

namespace {

BigComplex real_pt(const SurdExpr& e, mpfr_prec_t prec) {
    return BigComplex(e.eval(prec), BigReal(prec));
}

} // namespace

TEST_CASE("level parameters") {
    CHECK(LevelParam::from_s(2).ell == 4);
    CHECK(LevelParam::from_s(3).ell == 3);
    CHECK(LevelParam::from_s(4).ell == 2);
    CHECK(LevelParam::from_s(6).ell == 1);
    CHECK(LevelParam::from_ell(1).s == 6);
    CHECK_THROWS_AS(LevelParam::from_s(5), ValidationError);

    // ell = 4 sin^2(pi/s) through the exact sine table
    for (int s : {2, 3, 4, 6}) {
        SurdExpr sp = sin_pi_over(s);
        SurdExpr ell = SurdExpr(4) * sp * sp;
        CHECK(ell == SurdExpr(LevelParam::from_s(s).ell));
    }
}

TEST_CASE("series values at the origin") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    HyperValue v = eval_F(LevelParam::from_s(4), BigComplex(prec), BranchPolicy{}, pol);
    CHECK(v.f.re == BigReal(1L, prec));
    CHECK(v.f.im.is_zero());
    CHECK(v.g.is_zero());
}

TEST_CASE("hypergeometric ratios at the quadratic points") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    LevelParam lp = LevelParam::from_s(4);

    // F4(1/2 - 2 sqrt5/9) / F4(1/2 + 2 sqrt5/9) = 1/sqrt(5)
    HyperValue fa = eval_F(lp, real_pt(parse_real_surd("1/2-2/9*sqrt(5)"), prec), {}, pol);
    HyperValue fb = eval_F(lp, real_pt(parse_real_surd("1/2+2/9*sqrt(5)"), prec), {}, pol);
    BigComplex ratio = fa.f / fb.f;
    BigReal expect = BigReal(1L, prec) / sqrt(BigReal(5L, prec));
    CHECK(abs(ratio.re - expect) < tol(-48, prec));
    CHECK(abs(ratio.im) < tol(-48, prec));

    // continuation through the cut: ratio (3+i) sqrt2/10 on the lower branch
    HyperValue f2a = eval_F(lp, real_pt(parse_real_surd("1/2-7/24*sqrt(3)"), prec), {}, pol);
    HyperValue f2b = eval_F(lp, real_pt(parse_real_surd("1/2+7/24*sqrt(3)"), prec), {}, pol);
    BigComplex r2 = f2a.f / f2b.f;
    BigComplex m0 = parse_surd("(3+i)*sqrt(2)/10").eval(prec);
    CHECK(abs(r2 - m0) < tol(-45, prec));

    // the 20-digit modulus of the level-3 degree-23 detection
    LevelParam l3 = LevelParam::from_s(3);
    HyperValue g1 = eval_F(l3, real_pt(parse_real_surd("1/2-53/1000*sqrt(89)"), prec), {}, pol);
    HyperValue g2 = eval_F(l3, real_pt(parse_real_surd("1/2+53/1000*sqrt(89)"), prec), {}, pol);
    BigReal mod = abs(g1.f / g2.f);
    BigReal expected20 = BigReal::from_string("0.20851441405707476267", prec);
    CHECK(abs(mod - expected20) < tol(-20, prec));
}

TEST_CASE("G-transfer relation with the exact constants") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    LevelParam lp = LevelParam::from_s(4);
    HyperValue va = eval_F(lp, real_pt(parse_real_surd("1/2-2/9*sqrt(5)"), prec), {}, pol);
    HyperValue vb = eval_F(lp, real_pt(parse_real_surd("1/2+2/9*sqrt(5)"), prec), {}, pol);
    BigComplex cf(parse_real_surd("(16*sqrt(5)-36)/5").eval(prec), BigReal(prec));
    BigComplex cg(parse_real_surd("(161*sqrt(5)-360)/5").eval(prec), BigReal(prec));
    CHECK(abs(va.g - cf * vb.f - cg * vb.g) < tol(-45, prec));
}

TEST_CASE("derivative against a finite-difference oracle") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    LevelParam lp = LevelParam::from_s(2);
    BigReal h = tol(-20, prec);
    BigReal x(mpq_class(3, 10), prec);
    HyperValue up = eval_F(lp, BigComplex(x + h, BigReal(prec)), {}, pol);
    HyperValue dn = eval_F(lp, BigComplex(x - h, BigReal(prec)), {}, pol);
    BigComplex fd = (up.f - dn.f) / (h * 2L);
    HyperValue at = eval_F(lp, BigComplex(x, BigReal(prec)), {}, pol);
    BigComplex deriv = at.g / BigComplex(x, BigReal(prec)); // G = alpha F'
    CHECK(abs(fd - deriv) < tol(-25, prec));
}

TEST_CASE("Legendre relation residuals") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();

    // symmetric point: alpha = beta = 1/2, so F4(1/2) G4(1/2) = sqrt(2)/(2 pi)
    BigComplex half(BigReal(mpq_class(1, 2), prec), BigReal(prec));
    CHECK(legendre_residual(LevelParam::from_s(4), half, {}, pol) < tol(-45, prec));
    HyperValue vh = eval_F(LevelParam::from_s(4), half, {}, pol);
    BigReal fg = (vh.f * vh.g).re;
    BigReal rhs = sqrt(BigReal(2L, prec)) / (BigReal::pi(prec) * 2L);
    CHECK(abs(fg - rhs) < tol(-45, prec));

    CHECK(legendre_residual(LevelParam::from_s(3), complex_of(0.3, 0, prec), {}, pol) <
          tol(-45, prec));
    CHECK(legendre_residual(LevelParam::from_s(2), complex_of(0.9, 0, prec), {}, pol) <
          tol(-45, prec));

    SurdGen gen(424242);
    for (int s : {2, 3, 4, 6}) {
        for (int i = 0; i < 8; ++i) {
            BigComplex a = complex_of(gen.uniform(0.01, 0.99), 0, prec);
            CHECK(legendre_residual(LevelParam::from_s(s), a, {}, pol) < tol(-45, prec));
        }
    }

    CHECK_THROWS_AS(legendre_residual(LevelParam::from_s(4), BigComplex(prec), {}, pol),
                    SingularArgument);
}

TEST_CASE("Clausen identity residuals") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();

    CHECK(clausen_residual(LevelParam::from_s(4), BigComplex(prec), pol).is_zero());

    BigComplex a0 = real_pt(parse_real_surd("1/2-2/9*sqrt(5)"), prec); // z = 1/81
    CHECK(clausen_residual(LevelParam::from_s(4), a0, pol) < tol(-45, prec));
    CHECK(clausen_residual(LevelParam::from_s(6), complex_of(0.1, 0, prec), pol) < tol(-45, prec));

    SurdGen gen(77);
    for (int s : {2, 3, 4, 6}) {
        for (int i = 0; i < 6; ++i) {
            BigComplex a = complex_of(gen.uniform(0.01, 0.44), 0, prec);
            CHECK(clausen_residual(LevelParam::from_s(s), a, pol) < tol(-45, prec));
        }
    }

    // z = 4 alpha (1-alpha) = 1 at alpha = 1/2
    CHECK_THROWS_AS(
        clausen_residual(LevelParam::from_s(4),
                         BigComplex(BigReal(mpq_class(1, 2), prec), BigReal(prec)), pol),
        DivergentSeries);
}

TEST_CASE("Pochhammer term recurrence matches exact rationals") {
    // direct Clausen-kernel terms (1/2)_n (a)_n (b)_n / (n!)^3 as mpq
    for (int s : {2, 3, 4, 6}) {
        mpq_class qa(1, static_cast<unsigned long>(s));
        mpq_class qb = 1 - qa;
        mpq_class direct(1);
        mpq_class rec(1);
        for (long n = 0; n < 25; ++n) {
            CHECK(direct == rec);
            mpq_class num = (mpq_class(n) + mpq_class(1, 2)) * (mpq_class(n) + qa) *
                            (mpq_class(n) + qb);
            mpq_class den = mpq_class(n + 1) * mpq_class(n + 1) * mpq_class(n + 1);
            rec = rec * num / den;
            // direct recomputation from scratch
            direct = 1;
            for (long k = 0; k <= n; ++k)
                direct *= (mpq_class(k) + mpq_class(1, 2)) * (mpq_class(k) + qa) *
                          (mpq_class(k) + qb) /
                          (mpq_class(k + 1) * mpq_class(k + 1) * mpq_class(k + 1));
        }
    }
}

TEST_CASE("Schwarz reflection") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    for (int s : {3, 4}) {
        LevelParam lp = LevelParam::from_s(s);
        BigComplex a = complex_of(0.37, 0.81, prec);
        HyperValue v1 = eval_F(lp, a, {}, pol);
        HyperValue v2 = eval_F(lp, conj(a), {}, pol);
        CHECK(abs(v1.f - conj(v2.f)) < tol(-45, prec));
        CHECK(abs(v1.g - conj(v2.g)) < tol(-45, prec));
    }
}

TEST_CASE("path independence of the continuation") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    LevelParam lp = LevelParam::from_s(4);

    // generic complex target, radial route vs a wide detour
    BigComplex target = complex_of(2.5, -0.8, prec);
    HyperValue direct = eval_F(lp, target, {}, pol);
    HyperValue detour = eval_F_via(
        lp,
        {complex_of(0.4, 0.0, prec), complex_of(0.4, -1.6, prec), complex_of(3.0, -1.6, prec),
         complex_of(3.0, -0.8, prec), target},
        pol);
    CHECK(abs(direct.f - detour.f) < tol(-45, prec));
    CHECK(abs(direct.g - detour.g) < tol(-45, prec));

    // point past the cut: both admissible lower-half-plane routes agree
    BigComplex beta0 = real_pt(parse_real_surd("1/2+7/24*sqrt(3)"), prec);
    HyperValue v1 = eval_F(lp, beta0, BranchPolicy{BranchSide::lower}, pol);
    HyperValue v2 = eval_F_via(lp,
                               {complex_of(0.3, 0.0, prec), complex_of(0.3, -1.2, prec),
                                complex_of(1.3, -1.2, prec), beta0},
                               pol);
    CHECK(abs(v1.f - v2.f) < tol(-45, prec));
    CHECK(abs(v1.g - v2.g) < tol(-45, prec));

    // upper-branch value is the conjugate at a real point past the cut
    HyperValue up = eval_F(lp, beta0, BranchPolicy{BranchSide::upper}, pol);
    CHECK(abs(up.f - conj(v1.f)) < tol(-45, prec));
}

TEST_CASE("F and G are real with F positive on (0,1)") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    SurdGen gen(1213);
    for (int s : {2, 3, 4, 6}) {
        for (int i = 0; i < 5; ++i) {
            BigComplex a = complex_of(gen.uniform(0.02, 0.98), 0, prec);
            HyperValue v = eval_F(LevelParam::from_s(s), a, {}, pol);
            CHECK(abs(v.f.im) < tol(-45, prec));
            CHECK(v.f.re > BigReal(prec));
            CHECK(abs(v.g.im) < tol(-45, prec));
        }
    }
}

TEST_CASE("error handling at and near the singular point") {
    auto pol = policy();
    mpfr_prec_t prec = pol.working_bits();
    CHECK_THROWS_AS(
        eval_F(LevelParam::from_s(4), BigComplex(BigReal(1L, prec), BigReal(prec)), {}, pol),
        SingularArgument);

    // F' blows up like 1/(1-alpha); at distance 1e-30 the absolute error
    // budget is unattainable at 20 guard digits but fine at 60.
    BigComplex near1(BigReal(1L, prec) + tol(-30, prec), BigReal(prec));
    CHECK_THROWS_AS(eval_F(LevelParam::from_s(4), near1, {}, pol), PrecisionLoss);
    PrecisionPolicy wide(50, 60);
    BigComplex near1w(BigReal(1L, wide.working_bits()) + tol(-30, wide.working_bits()),
                      BigReal(wide.working_bits()));
    HyperValue v = eval_F(LevelParam::from_s(4), near1w, {}, wide);
    CHECK(v.err_bound < tol(-50, wide.working_bits()));
}
