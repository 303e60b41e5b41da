#include "ramapi/bigfloat.hpp"

#include <cstdlib>
#include <cstring>

#include "ramapi/errors.hpp"

namespace ramapi {

BigReal BigReal::from_string(const std::string& s, mpfr_prec_t prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("not a valid decimal number: '" + s + "'");
    return r;
}

std::string BigReal::str(int digits) const {
    if (digits < 2) digits = 2;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    // mpfr convention: value = 0.m * 10^e.  Render as d.ddd...e<k>.
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    long k = static_cast<long>(e) - 1;
    out += "e";
    if (k >= 0) out += "+";
    out += std::to_string(k);
    return out;
}

} // namespace ramapi
