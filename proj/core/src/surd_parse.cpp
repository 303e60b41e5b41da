#include <cctype>
#include <string>

#include "ramapi/surd.hpp"

namespace ramapi {

namespace {

// Recursive-descent parser for the exact literal grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom
//   atom   := INTEGER | 'sqrt' '(' INTEGER ')' | 'i' | '(' expr ')'
class SurdParser {
public:
    explicit SurdParser(const std::string& text) : s_(text) {}

    ComplexSurd parse() {
        ComplexSurd v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    ComplexSurd expr() {
        ComplexSurd v = term();
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

    ComplexSurd term() {
        ComplexSurd v = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v = v * factor();
            } else if (peek() == '/') {
                ++pos_;
                ComplexSurd d = factor();
                if (d.is_zero()) fail("division by zero in literal");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    ComplexSurd factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        return atom();
    }

    ComplexSurd atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            ComplexSurd v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n = integer();
            if (peek() == '.') fail("floating literals are not accepted");
            return ComplexSurd(SurdExpr(mpq_class(n)));
        }
        if (s_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            expect('(');
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("sqrt() takes a positive integer");
            mpz_class n = integer();
            expect(')');
            if (n <= 0) fail("sqrt() takes a positive integer");
            return ComplexSurd(SurdExpr::root_term(1, n));
        }
        if (c == 'i') {
            ++pos_;
            if (std::isalnum(static_cast<unsigned char>(peek()))) fail("unexpected identifier");
            return ComplexSurd(SurdExpr(), SurdExpr(1));
        }
        fail("expected a number, sqrt(), i or '('");
        return {};
    }

    mpz_class integer() {
        size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(s_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " in literal '" + s_ + "'", 1, static_cast<int>(pos_ + 1));
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

ComplexSurd parse_surd(const std::string& text) { return SurdParser(text).parse(); }

SurdExpr parse_real_surd(const std::string& text) {
    ComplexSurd v = parse_surd(text);
    if (!v.is_real()) throw ParseError("expected a real literal, got '" + text + "'");
    return v.re;
}

} // namespace ramapi
