#include "ramapi/hyper.hpp"

#include <cmath>
#include <vector>

#include "ramapi/errors.hpp"

namespace ramapi {

LevelParam LevelParam::from_s(int s) {
    switch (s) {
        case 2: return {2, 4};
        case 3: return {3, 3};
        case 4: return {4, 2};
        case 6: return {6, 1};
    }
    throw ValidationError("s must be one of 2, 3, 4, 6");
}

LevelParam LevelParam::from_ell(int ell) {
    switch (ell) {
        case 4: return {2, 4};
        case 3: return {3, 3};
        case 2: return {4, 2};
        case 1: return {6, 1};
    }
    throw ValidationError("level must be one of 1, 2, 3, 4");
}

SurdExpr sin_pi_over(int s) {
    switch (s) {
        case 2: return SurdExpr(1);
        case 3: return SurdExpr::root_term(mpq_class(1, 2), 3);
        case 4: return SurdExpr::root_term(mpq_class(1, 2), 2);
        case 6: return SurdExpr(mpq_class(1, 2));
    }
    throw ValidationError("s must be one of 2, 3, 4, 6");
}

namespace {

struct State {
    BigComplex f;  // F at current point
    BigComplex df; // dF/dalpha at current point
    BigReal err;   // accumulated absolute error estimate
};

// Direct power series for F and F' at |alpha| <= 1/2 + margin.
// Term ratio t_{n+1}/t_n = alpha (n+a)(n+b)/(n+1)^2 with a+b = 1 keeps the
// ratio magnitude below |alpha| for every n, so the geometric tail bound
// |t_N| r/(1-r) is certified.
State series_at(const BigComplex& alpha, const mpq_class& qa, const mpq_class& qb,
                mpfr_prec_t prec, int working_digits) {
    State st{BigComplex(prec), BigComplex(prec), BigReal(prec)};
    BigReal a(qa, prec), b(qb, prec);
    BigReal one(1L, prec);
    if (alpha.is_zero()) {
        st.f = BigComplex(one, BigReal(prec));
        st.df = BigComplex(a * b, BigReal(prec));
        return st;
    }
    BigReal eps = BigReal::pow10(-(working_digits + 5), prec);
    // v_n = c_n alpha^(n-1); F term = v_n * alpha, F' term = n * v_n.
    BigComplex v = BigComplex(one, BigReal(prec)) / alpha; // v_0 = alpha^(-1)
    BigComplex sum_f(prec), sum_df(prec);
    BigReal last_f(prec), last_df(prec);
    int quiet = 0;
    long n = 0;
    const long cap = 40L * working_digits + 400;
    for (; n <= cap; ++n) {
        BigReal nn(n, prec);
        BigComplex tf = v * alpha;       // c_n alpha^n
        BigComplex tdf = v * nn;         // n c_n alpha^(n-1)
        sum_f = sum_f + tf;
        sum_df = sum_df + tdf;
        last_f = abs(tf);
        last_df = abs(tdf);
        if (last_f < eps && last_df < eps) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        BigReal num = (nn + a) * (nn + b);
        BigReal den = (nn + one) * (nn + one);
        v = v * alpha * (num / den);
    }
    if (n > cap) throw PrecisionLoss("direct series did not converge within the term cap");
    BigReal r = abs(alpha);
    BigReal gone = one - r;
    if (!(gone > BigReal(prec))) throw PrecisionLoss("series argument too close to the unit circle");
    st.f = sum_f;
    st.df = sum_df;
    st.err = (last_f + last_df) * r / gone + eps * 8L;
    return st;
}

// One Taylor step of the hypergeometric ODE
//   z(1-z) F'' + (1-2z) F' - a b F = 0
// re-expanding the solution vector (F, F') from z0 to z0 + h.  Recurrence for
// the local coefficients d_k:
//   z0(1-z0)(k+2)(k+1) d_{k+2} + (1-2z0)(k+1)^2 d_{k+1} - (k+a)(k+b) d_k = 0.
void taylor_step(State& st, const BigComplex& z0, const BigComplex& h, const mpq_class& qa,
                 const mpq_class& qb, mpfr_prec_t prec, int working_digits) {
    BigReal a(qa, prec), b(qb, prec);
    BigReal one(1L, prec);
    BigComplex cone(one, BigReal(prec));
    BigComplex A = z0 * (cone - z0);
    BigComplex B = cone - z0 - z0;

    BigComplex dk = st.f;    // d_k
    BigComplex dk1 = st.df;  // d_{k+1}
    BigComplex hpow = cone;  // h^k
    BigComplex sum_f = dk;
    BigComplex sum_df = dk1; // sum (k+1) d_{k+1} h^k
    BigReal eps = BigReal::pow10(-(working_digits + 5), prec);
    BigReal scale = max(max(abs(st.f), abs(st.df)), one);
    BigReal last(prec);
    int quiet = 0;
    long k = 0;
    const long cap = 40L * working_digits + 400;
    for (; k <= cap; ++k) {
        BigReal kk(k, prec);
        BigComplex num = dk * ((kk + a) * (kk + b)) - dk1 * B * ((kk + one) * (kk + one));
        BigComplex dk2 = num / (A * ((kk + one) * (kk + 2L)));
        hpow = hpow * h;                      // h^(k+1)
        BigComplex tf = dk1 * hpow;           // d_{k+1} h^(k+1)
        BigComplex tdf = dk2 * hpow * (kk + 2L); // (k+2) d_{k+2} h^(k+1)
        sum_f = sum_f + tf;
        sum_df = sum_df + tdf;
        last = abs(tf) + abs(tdf);
        if (last < eps * scale) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
        dk = dk1;
        dk1 = dk2;
    }
    if (k > cap) throw PrecisionLoss("Taylor re-expansion did not converge within the term cap");
    st.f = sum_f;
    st.df = sum_df;
    // |h| <= 0.6 * dist(z0, {0,1}) keeps the late-term ratio below ~0.75.
    st.err += last * 3L + eps * scale * 8L;
}

// March (F, F') from `cur` to `target` in Taylor disks that stay clear of the
// singular points 0 and 1.
void march(State& st, BigComplex cur, const BigComplex& target, const mpq_class& qa,
           const mpq_class& qb, mpfr_prec_t prec, int working_digits) {
    BigComplex cone(BigReal(1L, prec), BigReal(prec));
    const BigReal step_ratio(mpq_class(3, 5), prec); // <= 0.7 x distance to {0,1}
    const int step_cap = 20000;
    for (int steps = 0;; ++steps) {
        if (steps > step_cap) throw PrecisionLoss("continuation exceeded the step budget");
        BigComplex d = target - cur;
        BigReal dl = abs(d);
        if (dl.is_zero()) return;
        BigReal rsing = min(abs(cur), abs(cur - cone));
        BigReal step = rsing * step_ratio;
        bool arrive = !(step < dl);
        BigComplex next = arrive ? target : cur + d * (step / dl);
        taylor_step(st, cur, next - cur, qa, qb, prec, working_digits);
        if (arrive) return;
        cur = next;
    }
}

double seg_dist(double px, double py, double qx, double qy, double xx, double xy) {
    double dx = qx - px, dy = qy - py;
    double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0) t = ((xx - px) * dx + (xy - py) * dy) / len2;
    t = std::min(1.0, std::max(0.0, t));
    double cx = px + t * dx - xx, cy = py + t * dy - xy;
    return std::sqrt(cx * cx + cy * cy);
}

} // namespace

HyperValue eval_F(LevelParam lp, const BigComplex& alpha, BranchPolicy bp,
                  const PrecisionPolicy& p) {
    const mpfr_prec_t prec = p.working_bits();
    const int wd = p.working_digits();
    mpq_class qa(1, static_cast<unsigned long>(lp.s));
    mpq_class qb = 1 - qa;

    BigComplex al(alpha.re, alpha.im);
    if (al.im.is_zero() && al.re == BigReal(1L, prec))
        throw SingularArgument("F_s has a logarithmic singularity at alpha = 1");
    if (mpfr_number_p(al.re.raw()) == 0 || mpfr_number_p(al.im.raw()) == 0)
        throw ValidationError("alpha must be finite");

    BigReal mag = abs(al);
    State st{BigComplex(prec), BigComplex(prec), BigReal(prec)};
    BigReal half(mpq_class(1, 2), prec);

    if (!(mag > half)) {
        st = series_at(al, qa, qb, prec, wd);
    } else {
        const double ax = al.re.to_double();
        const double ay = al.im.to_double();
        const int sigma = !al.im.is_zero() ? (al.im.is_negative() ? -1 : 1)
                                           : (bp.side == BranchSide::lower ? -1 : 1);
        BigReal r045(mpq_class(9, 20), prec);
        BigReal rclimb(mpq_class(4, 5), prec);

        std::vector<BigComplex> pts;
        BigComplex base(prec);
        bool corridor;
        if (al.im.is_zero() && al.re > half && al.re < BigReal(1L, prec)) {
            corridor = false; // straight real march toward 1⁻
            base = BigComplex(r045, BigReal(prec));
        } else if (al.im.is_zero() && al.re > half) {
            corridor = true; // real argument beyond 1: approach from the chosen side
            base = BigComplex(r045, BigReal(prec));
        } else {
            base = al * (r045 / mag);
            corridor = ax > 0.4 && std::abs(ay) < 0.3 &&
                       seg_dist(base.re.to_double(), base.im.to_double(), ax, ay, 1.0, 0.0) < 0.25;
            if (corridor) base = BigComplex(r045, BigReal(prec));
        }
        if (corridor) {
            BigReal y = (sigma < 0) ? -rclimb : rclimb;
            pts.push_back(BigComplex(r045, y));
            pts.push_back(BigComplex(al.re, y));
            pts.push_back(al);
        } else {
            pts.push_back(al);
        }
        st = series_at(base, qa, qb, prec, wd);
        BigComplex cur = base;
        for (const auto& wp : pts) {
            march(st, cur, wp, qa, qb, prec, wd);
            cur = wp;
        }
    }

    HyperValue out{st.f, al * st.df, st.err};
    BigReal budget = BigReal::pow10(-p.target_digits, prec);
    if (!(out.err_bound < budget))
        throw PrecisionLoss("error bound exceeds the target accuracy; raise guard digits");
    return out;
}

HyperValue eval_F_via(LevelParam lp, const std::vector<BigComplex>& waypoints,
                      const PrecisionPolicy& p) {
    if (waypoints.empty()) throw ValidationError("eval_F_via needs at least one waypoint");
    const mpfr_prec_t prec = p.working_bits();
    const int wd = p.working_digits();
    mpq_class qa(1, static_cast<unsigned long>(lp.s));
    mpq_class qb = 1 - qa;
    if (abs(waypoints.front()) > BigReal(mpq_class(1, 2), prec))
        throw ValidationError("the first waypoint must lie inside |alpha| <= 1/2");
    State st = series_at(waypoints.front(), qa, qb, prec, wd);
    BigComplex cur = waypoints.front();
    for (size_t i = 1; i < waypoints.size(); ++i) {
        march(st, cur, waypoints[i], qa, qb, prec, wd);
        cur = waypoints[i];
    }
    HyperValue out{st.f, cur * st.df, st.err};
    if (!(out.err_bound < BigReal::pow10(-p.target_digits, prec)))
        throw PrecisionLoss("error bound exceeds the target accuracy; raise guard digits");
    return out;
}

BigReal legendre_residual(LevelParam lp, const BigComplex& alpha, BranchPolicy bp,
                          const PrecisionPolicy& p) {
    const mpfr_prec_t prec = p.working_bits();
    BigComplex one(BigReal(1L, prec), BigReal(prec));
    BigComplex al(alpha.re, alpha.im);
    if (al.is_zero() || al == one)
        throw SingularArgument("Legendre residual needs alpha outside {0, 1}");
    BigComplex beta = one - al;
    HyperValue va = eval_F(lp, al, bp, p);
    HyperValue vb = eval_F(lp, beta, bp, p);
    BigReal spis = sin_pi_over(lp.s).eval(prec);
    BigReal rhs = spis / BigReal::pi(prec);
    BigComplex lhs = al * va.f * vb.g + beta * vb.f * va.g;
    return abs(lhs - BigComplex(rhs, BigReal(prec)));
}

BigReal clausen_residual(LevelParam lp, const BigComplex& alpha, const PrecisionPolicy& p) {
    const mpfr_prec_t prec = p.working_bits();
    const int wd = p.working_digits();
    BigComplex one(BigReal(1L, prec), BigReal(prec));
    BigComplex al(alpha.re, alpha.im);
    BigComplex z = al * (one - al) * BigReal(4L, prec);
    BigReal zmag = abs(z);
    if (!(zmag < BigReal(1L, prec)))
        throw DivergentSeries("Clausen series needs |4 alpha (1-alpha)| < 1");

    mpq_class qa(1, static_cast<unsigned long>(lp.s));
    mpq_class qb = 1 - qa;
    BigReal a(qa, prec), b(qb, prec), hf(mpq_class(1, 2), prec), rone(1L, prec);

    // sum ((1/2)_n (a)_n (b)_n / (n!)^3) z^n; term ratio magnitude < |z|.
    BigComplex term = one;
    BigComplex sum(prec);
    BigReal eps = BigReal::pow10(-(wd + 5), prec);
    BigReal lastmag(prec);
    long n = 0;
    const long cap = 600L * wd + 4000; // |z| up to ~0.99 converges inside the cap
    for (; n <= cap; ++n) {
        sum = sum + term;
        lastmag = abs(term);
        if (lastmag < eps) break;
        BigReal nn(n, prec);
        BigReal num = (nn + hf) * (nn + a) * (nn + b);
        BigReal den = (nn + rone) * (nn + rone) * (nn + rone);
        term = term * z * (num / den);
    }
    if (n > cap) throw PrecisionLoss("Clausen series did not converge within the term cap");

    HyperValue va = eval_F(lp, al, BranchPolicy{}, p);
    BigComplex fsq = va.f * va.f;
    return abs(sum - fsq);
}

} // namespace ramapi
