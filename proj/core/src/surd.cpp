#include "ramapi/surd.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace ramapi {

std::optional<SquarefreeParts> squarefree_decompose(const mpz_class& n, unsigned long trial_bound) {
    if (n <= 0) return std::nullopt;
    mpz_class rest = n;
    mpz_class m = 1, k = 1;
    for (unsigned long p = 2; p <= trial_bound; p = (p == 2 ? 3 : p + 2)) {
        mpz_class pz(static_cast<long>(p));
        if (pz * pz > rest) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= static_cast<long>(p);
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) m *= pz;
        if (e % 2) k *= pz;
    }
    if (rest > 1) {
        // No factor <= trial_bound remains.  rest is prime if below bound^2;
        // a perfect square is also fine; anything else is unresolved.
        mpz_class bound2 = mpz_class(static_cast<long>(trial_bound));
        bound2 *= bound2;
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            m *= r;
        } else if (rest <= bound2) {
            k *= rest;
        } else {
            return std::nullopt;
        }
    }
    return SquarefreeParts{m, k};
}

SurdExpr SurdExpr::root_term(const mpq_class& c, const mpz_class& n) {
    if (n <= 0) throw ValidationError("sqrt radicand must be a positive integer");
    auto parts = squarefree_decompose(n);
    if (!parts) throw ValidationError("radicand too large to reduce to squarefree form");
    SurdExpr e;
    e.set_term(parts->radicand, c * mpq_class(parts->square_root));
    return e;
}

SurdExpr operator+(const SurdExpr& a, const SurdExpr& b) {
    SurdExpr r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, c);
    return r;
}

SurdExpr operator-(const SurdExpr& a, const SurdExpr& b) {
    SurdExpr r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, -c);
    return r;
}

SurdExpr operator-(const SurdExpr& a) {
    SurdExpr r;
    for (const auto& [k, c] : a.t_) r.set_term(k, -c);
    return r;
}

SurdExpr operator*(const SurdExpr& a, const SurdExpr& b) {
    SurdExpr r;
    for (const auto& [j, c] : a.t_) {
        for (const auto& [k, d] : b.t_) {
            // sqrt(j)*sqrt(k) = g*sqrt(j*k/g^2) with g = gcd(j,k); both
            // radicands squarefree makes the reduced radicand squarefree.
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), j.get_mpz_t(), k.get_mpz_t());
            mpz_class rad = (j / g) * (k / g);
            r.add_term(rad, c * d * mpq_class(g));
        }
    }
    return r;
}

namespace {

// Distinct prime structure of the radical support.  Radicands are squarefree;
// any cofactor that survives trial division is kept as an atomic unit.
std::optional<std::set<mpz_class>> support_primes(const SurdExpr& e) {
    std::set<mpz_class> primes;
    std::vector<mpz_class> atoms;
    for (const auto& [k, c] : e.terms()) {
        (void)c;
        if (k == 1) continue;
        mpz_class rest = k;
        for (unsigned long p = 2; p <= 1000000ul; p = (p == 2 ? 3 : p + 2)) {
            mpz_class pz(static_cast<long>(p));
            if (pz * pz > rest) break;
            if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                rest /= static_cast<long>(p);
                primes.insert(pz);
            }
        }
        if (rest > 1) {
            mpz_class b2(1000000l);
            b2 *= b2;
            if (rest <= b2) {
                primes.insert(rest);
            } else {
                // unresolved cofactor; usable only if it never overlaps others
                for (const auto& a : atoms) {
                    mpz_class g;
                    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), rest.get_mpz_t());
                    if (g != 1 && a != rest) return std::nullopt;
                }
                atoms.push_back(rest);
                primes.insert(rest);
            }
        }
    }
    return primes;
}

// Number of independent radicals: the GF(2) rank of the radicands viewed as
// prime-exponent vectors in Q*/(Q*)^2.  sqrt(30) alone is rank 1; the set
// {sqrt(2), sqrt(3), sqrt(6)} is rank 2.
std::optional<int> radical_rank(const SurdExpr& e) {
    auto primes = support_primes(e);
    if (!primes) return std::nullopt;
    std::vector<mpz_class> basis(primes->begin(), primes->end());
    if (basis.size() > 63) return std::nullopt;
    std::vector<unsigned long long> rows;
    for (const auto& [k, c] : e.terms()) {
        (void)c;
        if (k == 1) continue;
        unsigned long long vec = 0;
        for (size_t i = 0; i < basis.size(); ++i)
            if (mpz_divisible_p(k.get_mpz_t(), basis[i].get_mpz_t())) vec |= 1ull << i;
        rows.push_back(vec);
    }
    int rank = 0;
    for (size_t bit = 0; bit < basis.size(); ++bit) {
        unsigned long long mask = 1ull << bit;
        size_t pivot = rows.size();
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i] & mask) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<size_t>(rank) && (rows[i] & mask)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

// Split e = A + B*sqrt(p): terms whose radicand p divides go to B (with the
// radicand divided by p), the rest to A.
void split_by_prime(const SurdExpr& e, const mpz_class& p, SurdExpr& a_out, SurdExpr& b_out) {
    SurdExpr::TermMap a, b;
    for (const auto& [k, c] : e.terms()) {
        if (mpz_divisible_p(k.get_mpz_t(), p.get_mpz_t())) {
            b[k / p] = c;
        } else {
            a[k] = c;
        }
    }
    SurdExpr A, B;
    for (auto& [k, c] : a) A = A + SurdExpr::root_term(c, k);
    for (auto& [k, c] : b) B = B + SurdExpr::root_term(c, k);
    a_out = A;
    b_out = B;
}

// Conjugate of e over sqrt(p): negate every term whose radicand p divides.
SurdExpr conjugate_over(const SurdExpr& e, const mpz_class& p) {
    SurdExpr r;
    for (const auto& [k, c] : e.terms()) {
        bool flip = mpz_divisible_p(k.get_mpz_t(), p.get_mpz_t()) != 0;
        r = r + SurdExpr::root_term(flip ? -c : c, k);
    }
    return r;
}

} // namespace

SurdExpr operator/(const SurdExpr& a, const SurdExpr& b) {
    if (b.is_zero()) throw DivisionByZero("surd division by zero");
    if (b.is_rational()) {
        mpq_class inv = 1 / b.rational_part();
        SurdExpr r;
        for (const auto& [k, c] : a.terms()) r = r + SurdExpr::root_term(c * inv, k);
        return r;
    }
    auto rank = radical_rank(b);
    if (!rank)
        throw UnsupportedRadicalDepth("cannot resolve radical support of divisor " + b.str());
    if (*rank > 2)
        throw UnsupportedRadicalDepth("divisor " + b.str() +
                                      " spans more than two independent radicals");
    // Rationalize one prime at a time; each conjugation removes one prime
    // from the divisor's support.
    auto primes = support_primes(b);
    mpz_class p = *primes->rbegin();
    SurdExpr conj_b = conjugate_over(b, p);
    return (a * conj_b) / (b * conj_b);
}

SurdExpr surd_arith(const SurdExpr& lhs, const SurdExpr& rhs, SurdOp op) {
    switch (op) {
        case SurdOp::add: return lhs + rhs;
        case SurdOp::sub: return lhs - rhs;
        case SurdOp::mul: return lhs * rhs;
        case SurdOp::div: return lhs / rhs;
    }
    throw Error("unreachable");
}

int SurdExpr::sign() const {
    if (t_.empty()) return 0;
    if (is_rational()) return sgn(rational_part());
    bool all_pos = true, all_neg = true;
    for (const auto& [k, c] : t_) {
        (void)k;
        if (c > 0) all_neg = false;
        if (c < 0) all_pos = false;
    }
    if (all_pos) return 1;
    if (all_neg) return -1;
    // Mixed signs: split over one prime of the support and square away the
    // radical.  sign(A + B sqrt(p)) reduces to comparing A^2 with p B^2.
    auto primes = support_primes(*this);
    if (!primes || primes->empty())
        throw UnsupportedRadicalDepth("cannot determine sign of " + str());
    mpz_class p = *primes->rbegin();
    SurdExpr A, B;
    split_by_prime(*this, p, A, B);
    int sa = A.sign();
    int sb = B.sign();
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // Opposite signs: |A| vs |B|sqrt(p) decides; both squares drop sqrt(p).
    SurdExpr diff = A * A - B * B * SurdExpr(mpq_class(p));
    int sd = diff.sign();
    return sd == 0 ? 0 : (sd > 0 ? sa : sb);
}

BigReal SurdExpr::eval(mpfr_prec_t prec) const {
    BigReal acc(prec);
    for (const auto& [k, c] : t_) {
        BigReal term(c, prec);
        if (k != 1) {
            BigReal root(k, prec);
            term *= sqrt(root);
        }
        acc += term;
    }
    return acc;
}

namespace {

// sqrt of a nonnegative rational as a surd: sqrt(p/q) = sqrt(p*q)/q.
std::optional<SurdExpr> sqrt_rational(const mpq_class& q) {
    if (q == 0) return SurdExpr();
    if (q < 0) return std::nullopt;
    mpz_class pq = q.get_num() * q.get_den();
    auto parts = squarefree_decompose(pq);
    if (!parts) return std::nullopt;
    return SurdExpr::root_term(mpq_class(parts->square_root) / mpq_class(q.get_den()),
                               parts->radicand);
}

} // namespace

std::optional<SurdExpr> SurdExpr::sqrt_exact() const {
    int s = sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return SurdExpr();
    if (is_rational()) return sqrt_rational(rational_part());
    if (t_.size() > 2 || (t_.size() == 2 && t_.count(1) == 0)) return std::nullopt;
    // Single radical a + b*sqrt(k): classic denesting.  With c = sqrt(a^2 -
    // b^2 k) rational, sqrt(a + b sqrt(k)) = sqrt((a+c)/2) + sgn(b) sqrt((a-c)/2).
    mpq_class a = rational_part();
    mpz_class k;
    mpq_class b;
    for (const auto& [rad, c] : t_) {
        if (rad != 1) {
            k = rad;
            b = c;
        }
    }
    mpq_class disc = a * a - b * b * mpq_class(k);
    if (disc < 0) return std::nullopt;
    auto c_root = sqrt_rational(disc);
    if (!c_root || !c_root->is_rational()) return std::nullopt;
    mpq_class c = c_root->rational_part();
    mpq_class u = (a + c) / 2;
    mpq_class v = (a - c) / 2;
    if (u < 0 || v < 0) return std::nullopt;
    auto su = sqrt_rational(u);
    auto sv = sqrt_rational(v);
    if (!su || !sv) return std::nullopt;
    SurdExpr res = (b > 0) ? (*su + *sv) : (*su - *sv);
    if (res * res == *this && res.sign() >= 0) return res;
    res = (b > 0) ? (*sv + *su) : (*sv - *su);
    if (res * res == *this && res.sign() >= 0) return res;
    return std::nullopt;
}

ComplexSurd operator/(const ComplexSurd& a, const ComplexSurd& b) {
    if (b.is_zero()) throw DivisionByZero("complex surd division by zero");
    if (b.is_real()) return {a.re / b.re, a.im / b.re};
    ComplexSurd num = a * conj(b);
    SurdExpr den = b.norm();
    return {num.re / den, num.im / den};
}

std::optional<ComplexSurd> ComplexSurd::sqrt_exact() const {
    if (is_real()) {
        if (re.sign() >= 0) {
            auto r = re.sqrt_exact();
            if (!r) return std::nullopt;
            return ComplexSurd(*r);
        }
        auto r = (-re).sqrt_exact();
        if (!r) return std::nullopt;
        return ComplexSurd(SurdExpr(), *r);
    }
    // w = re + im*i with |w| expressible: u = sqrt((|w|+re)/2),
    // v = sgn(im)*sqrt((|w|-re)/2).
    SurdExpr n = norm();
    auto mod = n.sqrt_exact();
    if (!mod) return std::nullopt;
    SurdExpr u2 = (*mod + re) / SurdExpr(2);
    SurdExpr v2 = (*mod - re) / SurdExpr(2);
    auto u = u2.sqrt_exact();
    auto v = v2.sqrt_exact();
    if (!u || !v) return std::nullopt;
    ComplexSurd res = (im.sign() >= 0) ? ComplexSurd(*u, *v) : ComplexSurd(*u, -*v);
    if (res * res == *this) return res;
    return std::nullopt;
}

BigComplex surd_eval(const ComplexSurd& e, const PrecisionPolicy& p) {
    return e.eval(p.working_bits());
}

BigReal surd_eval(const SurdExpr& e, const PrecisionPolicy& p) { return e.eval(p.working_bits()); }

std::string to_string(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string SurdExpr::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t_) {
        mpq_class ac = abs(c);
        std::string piece;
        if (k == 1) {
            piece = to_string(ac);
        } else if (ac == 1) {
            piece = "sqrt(" + k.get_str() + ")";
        } else {
            piece = to_string(ac) + "*sqrt(" + k.get_str() + ")";
        }
        if (first) {
            out += (c < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (c < 0 ? "-" : "+") + piece;
        }
    }
    return out;
}

std::string ComplexSurd::str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return "(" + im.str() + ")*i";
    return "(" + re.str() + ")+(" + im.str() + ")*i";
}

} // namespace ramapi
