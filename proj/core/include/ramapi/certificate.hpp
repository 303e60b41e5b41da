#ifndef RAMAPI_CERTIFICATE_HPP
#define RAMAPI_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramapi/series.hpp"
#include "ramapi/transform.hpp"

namespace ramapi {

enum class Verdict { PROVEN_NUMERIC, VERIFIED_ONLY, FAILED };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// Structured record of one proof run: the series, the solution point used,
// derived coefficients, every residual, and the verdict.
struct Certificate {
    int schema_version = 1;
    int digits = 50;
    int guard_digits = 20;
    std::string branch = "lower";

    SeriesSpec series;
    std::optional<int> detected_d;
    std::string transformation_name; // empty when no transformation applied
    std::optional<SolutionPoint> solution;
    std::optional<DerivedCoefficients> derived;
    bool coefficients_match = false;

    // Ordered name -> residual pairs (clausen, legendre_reduction,
    // multiplier, derivative_identity, g_transfer, final_sum as applicable).
    std::vector<std::pair<std::string, BigReal>> residuals;

    std::optional<mpq_class> r;
    std::optional<BigReal> q;

    Verdict verdict = Verdict::FAILED;
    std::vector<std::string> notes;
};

// Deterministic JSON with decimal strings at full working precision and surd
// literals for exact fields.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

// Writes, re-reads and structurally compares; IoError on filesystem trouble,
// Error when the round trip does not reproduce the certificate.
void emit_certificate(const Certificate& c, const std::string& path);

} // namespace ramapi

#endif
