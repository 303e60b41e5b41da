#include "ramapi/rational_function.hpp"

#include <cctype>

namespace ramapi {

RationalFunctionQ::RationalFunctionQ(PolyQ num, PolyQ den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RationalFunctionQ::normalize() {
    if (num_.is_zero()) {
        den_ = PolyQ(mpq_class(1));
        return;
    }
    PolyQ g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    mpq_class lead = den_.leading();
    num_ = num_ * (1 / lead);
    den_ = den_ * (1 / lead);
}

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (b.num_.is_zero()) throw DivisionByZero("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunctionQ RationalFunctionQ::derivative() const {
    PolyQ n = num_.derivative() * den_ - num_ * den_.derivative();
    return {std::move(n), den_ * den_};
}

BigComplex RationalFunctionQ::eval(const BigComplex& z) const {
    BigComplex d = den_.eval(z);
    BigComplex n = num_.eval(z);
    BigReal scale = max(abs(z), BigReal(1L, z.prec()));
    BigReal tiny = BigReal::pow10(-(static_cast<int>(z.prec() / 4)), z.prec());
    if (abs(d) < tiny * pow_si(scale, den_.degree()))
        throw PoleAtPoint("denominator vanishes at evaluation point");
    return n / d;
}

ComplexSurd RationalFunctionQ::eval_exact(const ComplexSurd& z) const {
    ComplexSurd d = den_.eval_exact(z);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at evaluation point");
    return num_.eval_exact(z) / d;
}

std::string RationalFunctionQ::str() const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

// expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
// factor := '-' factor | base ('^' INTEGER)? ; base := INTEGER | 'x' | '(' expr ')'
class RfParser {
public:
    explicit RfParser(const std::string& text) : s_(text) {}

    RationalFunctionQ parse() {
        RationalFunctionQ v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    RationalFunctionQ expr() {
        RationalFunctionQ v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v = v + term();
            } else if (peek() == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    RationalFunctionQ term() {
        RationalFunctionQ v = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v = v * factor();
            } else if (peek() == '/') {
                ++pos_;
                v = v / factor();
            } else {
                return v;
            }
        }
    }

    RationalFunctionQ factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return RationalFunctionQ(PolyQ(mpq_class(-1))) * factor();
        }
        RationalFunctionQ b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            mpz_class e = integer();
            if (e < 0 || e > 64) fail("exponent out of range");
            unsigned ue = static_cast<unsigned>(e.get_ui());
            RationalFunctionQ r(PolyQ(mpq_class(1)));
            for (unsigned i = 0; i < ue; ++i) r = r * b;
            return r;
        }
        return b;
    }

    RationalFunctionQ base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunctionQ v = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return RationalFunctionQ(PolyQ::x());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n = integer();
            if (peek() == '.') fail("floating literals are not accepted");
            return RationalFunctionQ(PolyQ(mpq_class(n)));
        }
        fail("expected a number, x or '('");
        return RationalFunctionQ();
    }

    mpz_class integer() {
        size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " in rational function '" + s_ + "'", 1, static_cast<int>(pos_ + 1));
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

RationalFunctionQ parse_rational_function(const std::string& text) {
    return RfParser(text).parse();
}

} // namespace ramapi
