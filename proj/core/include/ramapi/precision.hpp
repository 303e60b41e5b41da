#ifndef RAMAPI_PRECISION_HPP
#define RAMAPI_PRECISION_HPP

#include <mpfr.h>

#include "ramapi/errors.hpp"

namespace ramapi {

// Decimal accuracy contract for a whole computation: results are good to
// target_digits, all intermediate work runs at target_digits + guard_digits.
struct PrecisionPolicy {
    int target_digits = 50;
    int guard_digits = 20;

    PrecisionPolicy() = default;
    PrecisionPolicy(int target, int guard) : target_digits(target), guard_digits(guard) {
        if (target_digits < 10) throw ValidationError("target_digits must be >= 10");
        if (guard_digits < 10) throw ValidationError("guard_digits must be >= 10");
    }

    int working_digits() const { return target_digits + guard_digits; }

    // log2(10) = 3.3219...; a fixed 16-bit pad absorbs conversion slop.
    mpfr_prec_t working_bits() const {
        return static_cast<mpfr_prec_t>(working_digits() * 3.3219280948873623 + 16);
    }
    mpfr_prec_t target_bits() const {
        return static_cast<mpfr_prec_t>(target_digits * 3.3219280948873623 + 16);
    }
};

} // namespace ramapi

#endif
