#include "ramapi/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace ramapi {

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const mpq_class& s) {
    std::vector<mpq_class> c = a.c_;
    for (auto& v : c) v *= s;
    return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a) { return a * mpq_class(-1); }

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<mpq_class> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
    return PolyQ(std::move(c));
}

PolyQ PolyQ::pow(unsigned e) const {
    PolyQ r(mpq_class(1));
    PolyQ base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    PolyQ q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        mpq_class f = r.leading() / d.leading();
        std::vector<mpq_class> mono(k + 1, mpq_class(0));
        mono[k] = f;
        PolyQ m(std::move(mono));
        q = q + m;
        r = r - m * d;
    }
    return {q, r};
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return PolyQ();
    return *this * (1 / leading());
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ x = a, y = b;
    while (!y.is_zero()) {
        PolyQ r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

std::vector<std::pair<PolyQ, int>> PolyQ::squarefree_factors() const {
    // Yun's algorithm over Q.
    std::vector<std::pair<PolyQ, int>> out;
    PolyQ p = monic();
    if (p.degree() <= 0) return out;
    PolyQ dp = p.derivative();
    PolyQ a = gcd(p, dp);
    PolyQ b = p.divmod(a).first;
    PolyQ c = dp.divmod(a).first;
    PolyQ d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        PolyQ f = gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f, i);
        b = b.divmod(f).first;
        c = d.divmod(f).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

mpq_class PolyQ::eval(const mpq_class& v) const {
    mpq_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

BigComplex PolyQ::eval(const BigComplex& z) const {
    mpfr_prec_t prec = z.prec();
    BigComplex acc(prec);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * z;
        acc.re += BigReal(*it, prec);
    }
    return acc;
}

ComplexSurd PolyQ::eval_exact(const ComplexSurd& z) const {
    ComplexSurd acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + ComplexSurd(SurdExpr(*it));
    return acc;
}

std::string PolyQ::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        mpq_class c = c_[i];
        if (c == 0) continue;
        mpq_class ac = abs(c);
        std::string piece;
        if (i == 0) {
            piece = to_string(ac);
        } else {
            std::string xs = (i == 1) ? "x" : "x^" + std::to_string(i);
            piece = (ac == 1) ? xs : to_string(ac) + "*" + xs;
        }
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + piece;
        } else {
            out += (c < 0 ? "-" : "+") + piece;
        }
    }
    return out;
}

namespace {

// One Aberth-Ehrlich pass; returns the largest correction magnitude.
BigReal aberth_pass(const std::vector<BigComplex>& coeffs, const PolyQ& dpoly,
                    std::vector<BigComplex>& z, mpfr_prec_t prec) {
    const size_t n = z.size();
    BigReal worst(prec);
    std::vector<BigComplex> corr(n, BigComplex(prec));
    for (size_t i = 0; i < n; ++i) {
        // p(z_i) via Horner on prepared complex coefficients.
        BigComplex pz(prec);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) pz = pz * z[i] + *it;
        BigComplex dz = dpoly.eval(z[i]);
        if (abs(dz).is_zero()) continue;
        BigComplex newton = pz / dz;
        BigComplex sum(prec);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            BigComplex diff = z[i] - z[j];
            sum = sum + BigComplex(BigReal(1L, prec), BigReal(prec)) / diff;
        }
        BigComplex denom = BigComplex(BigReal(1L, prec), BigReal(prec)) - newton * sum;
        corr[i] = newton / denom;
        BigReal mag = abs(corr[i]);
        if (mag > worst) worst = mag;
    }
    for (size_t i = 0; i < n; ++i) z[i] = z[i] - corr[i];
    return worst;
}

std::vector<RootBox> roots_of_squarefree(const PolyQ& sq, int multiplicity, mpfr_prec_t prec) {
    const int n = sq.degree();
    std::vector<RootBox> out;
    if (n <= 0) return out;

    PolyQ monic = sq.monic();
    std::vector<BigComplex> coeffs;
    coeffs.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
        coeffs.emplace_back(BigReal(monic.coeff(i), prec), BigReal(prec));

    // Cauchy bound for initial circle radius.
    double r = 0.0;
    for (int i = 0; i < n; ++i) {
        double m = std::abs(monic.coeff(i).get_d());
        r = std::max(r, m);
    }
    r = 1.0 + r;

    std::vector<BigComplex> z;
    z.reserve(n);
    BigReal pi = BigReal::pi(prec);
    for (int i = 0; i < n; ++i) {
        // Slightly irrational angle offset avoids symmetric stalemates.
        BigReal theta = pi * 2L * BigReal(mpq_class(2 * i + 1, 2 * n), prec) +
                        BigReal(mpq_class(7, static_cast<unsigned long>(13 + n)), prec);
        BigReal rr(prec);
        mpfr_set_d(rr.raw(), r * (1.0 + 0.05 * i / std::max(1, n)), MPFR_RNDN);
        BigReal c(prec), s(prec);
        mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
        z.emplace_back(rr * c, rr * s);
    }

    PolyQ dp = monic.derivative();
    BigReal stop = BigReal::pow10(-static_cast<int>(prec * 0.30103) + 8, prec);
    for (int it = 0; it < 2000; ++it) {
        BigReal worst = aberth_pass(coeffs, dp, z, prec);
        if (worst < stop) break;
    }

    // Weierstrass residual disks: |p(z_i)| / prod_{j != i} |z_i - z_j|,
    // inflated by n, contains a root of the squarefree factor.
    for (int i = 0; i < n; ++i) {
        BigComplex pz(prec);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) pz = pz * z[i] + *it;
        BigReal denom(1L, prec);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= abs(z[i] - z[j]);
        }
        RootBox box;
        box.value = z[i];
        box.radius = abs(pz) / denom * long(n);
        box.multiplicity = multiplicity;
        out.push_back(std::move(box));
    }
    return out;
}

} // namespace

std::vector<RootBox> poly_roots(const PolyQ& poly, const PrecisionPolicy& p) {
    if (poly.degree() < 1) throw ValidationError("poly_roots requires degree >= 1");
    BigReal bound = BigReal::pow10(-p.target_digits, p.working_bits());
    std::vector<RootBox> all;
    for (const auto& [factor, mult] : poly.squarefree_factors()) {
        // Escalate working precision until the Weierstrass disks meet the
        // promised bound; clustered roots may need the extra headroom.
        std::vector<RootBox> part;
        for (mpfr_prec_t prec = p.working_bits() + 64;; prec *= 2) {
            part = roots_of_squarefree(factor, mult, prec);
            bool tight = true;
            for (const auto& r : part)
                if (!(r.radius < bound)) tight = false;
            if (tight || prec > 16 * p.working_bits()) break;
        }
        all.insert(all.end(), part.begin(), part.end());
    }
    // Deterministic order: by real part, then imaginary part.
    std::sort(all.begin(), all.end(), [](const RootBox& a, const RootBox& b) {
        if (a.value.re != b.value.re) return a.value.re < b.value.re;
        return a.value.im < b.value.im;
    });
    return all;
}

} // namespace ramapi
