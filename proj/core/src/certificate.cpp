#include "ramapi/certificate.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ramapi/errors.hpp"

namespace ramapi {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PROVEN_NUMERIC: return "PROVEN_NUMERIC";
        case Verdict::VERIFIED_ONLY: return "VERIFIED_ONLY";
        case Verdict::FAILED: return "FAILED";
    }
    throw Error("unreachable");
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "PROVEN_NUMERIC") return Verdict::PROVEN_NUMERIC;
    if (s == "VERIFIED_ONLY") return Verdict::VERIFIED_ONLY;
    if (s == "FAILED") return Verdict::FAILED;
    throw ParseError("unknown verdict '" + s + "'");
}

namespace {

int full_digits(const Certificate& c) { return c.digits + c.guard_digits; }

ordered_json alg_to_json(const AlgValue& v, int digits) {
    ordered_json j;
    j["exact"] = v.exact ? ordered_json(v.exact->str()) : ordered_json(nullptr);
    j["re"] = v.approx.re.str(digits);
    j["im"] = v.approx.im.str(digits);
    return j;
}

AlgValue alg_from_json(const ordered_json& j, mpfr_prec_t prec) {
    AlgValue v;
    if (!j.at("exact").is_null()) v.exact = parse_surd(j.at("exact").get<std::string>());
    v.approx = BigComplex(BigReal::from_string(j.at("re").get<std::string>(), prec),
                          BigReal::from_string(j.at("im").get<std::string>(), prec));
    return v;
}

ordered_json series_to_json(const SeriesSpec& s) {
    ordered_json j;
    j["name"] = s.name;
    if (!s.alias.empty()) j["alias"] = s.alias;
    j["s"] = s.level.s;
    if (s.d) j["d"] = *s.d;
    j["z"] = s.z.str();
    j["a"] = s.a.str();
    j["b"] = s.b.str();
    return j;
}

SeriesSpec series_from_json(const ordered_json& j) {
    SeriesSpec s;
    s.name = j.at("name").get<std::string>();
    if (j.contains("alias")) s.alias = j.at("alias").get<std::string>();
    s.level = LevelParam::from_s(j.at("s").get<int>());
    if (j.contains("d")) s.d = j.at("d").get<int>();
    s.z = parse_real_surd(j.at("z").get<std::string>());
    s.a = parse_real_surd(j.at("a").get<std::string>());
    s.b = parse_real_surd(j.at("b").get<std::string>());
    return s;
}

ordered_json solution_to_json(const SolutionPoint& sp, int digits) {
    ordered_json j;
    j["d"] = sp.d;
    j["s"] = sp.level.s;
    j["x0"] = alg_to_json(sp.x0, digits);
    j["alpha0"] = alg_to_json(sp.alpha0, digits);
    j["beta0"] = alg_to_json(sp.beta0, digits);
    j["m0"] = alg_to_json(sp.m0, digits);
    j["alpha0_prime"] = alg_to_json(sp.alpha0_prime, digits);
    j["beta0_prime"] = alg_to_json(sp.beta0_prime, digits);
    j["m0_prime"] = alg_to_json(sp.m0_prime, digits);
    j["z0"] = alg_to_json(sp.z0, digits);
    j["branch_consistent"] = sp.branch_consistent;
    j["all_exact"] = sp.all_exact;
    return j;
}

SolutionPoint solution_from_json(const ordered_json& j, mpfr_prec_t prec) {
    SolutionPoint sp;
    sp.d = j.at("d").get<int>();
    sp.level = LevelParam::from_s(j.at("s").get<int>());
    sp.x0 = alg_from_json(j.at("x0"), prec);
    sp.alpha0 = alg_from_json(j.at("alpha0"), prec);
    sp.beta0 = alg_from_json(j.at("beta0"), prec);
    sp.m0 = alg_from_json(j.at("m0"), prec);
    sp.alpha0_prime = alg_from_json(j.at("alpha0_prime"), prec);
    sp.beta0_prime = alg_from_json(j.at("beta0_prime"), prec);
    sp.m0_prime = alg_from_json(j.at("m0_prime"), prec);
    sp.z0 = alg_from_json(j.at("z0"), prec);
    sp.branch_consistent = j.at("branch_consistent").get<bool>();
    sp.all_exact = j.at("all_exact").get<bool>();
    return sp;
}

} // namespace

std::string certificate_to_json(const Certificate& c) {
    const int digits = full_digits(c);
    ordered_json j;
    j["schema_version"] = c.schema_version;
    j["digits"] = c.digits;
    j["guard_digits"] = c.guard_digits;
    j["branch"] = c.branch;
    j["series"] = series_to_json(c.series);
    j["detected_d"] = c.detected_d ? ordered_json(*c.detected_d) : ordered_json(nullptr);
    j["transformation"] = c.transformation_name;
    j["solution"] = c.solution ? solution_to_json(*c.solution, digits) : ordered_json(nullptr);
    if (c.derived) {
        ordered_json d;
        d["a"] = alg_to_json(c.derived->a, digits);
        d["b"] = alg_to_json(c.derived->b, digits);
        d["C"] = alg_to_json(c.derived->C, digits);
        j["derived"] = d;
    } else {
        j["derived"] = nullptr;
    }
    j["coefficients_match"] = c.coefficients_match;
    ordered_json res = ordered_json::object();
    for (const auto& [name, value] : c.residuals) res[name] = value.str(digits);
    j["residuals"] = res;
    j["r"] = c.r ? ordered_json(to_string(*c.r)) : ordered_json(nullptr);
    j["q"] = c.q ? ordered_json(c.q->str(digits)) : ordered_json(nullptr);
    j["verdict"] = to_string(c.verdict);
    j["notes"] = c.notes;
    return j.dump(2) + "\n";
}

namespace {
Certificate certificate_from_json_impl(const ordered_json& j);
}

Certificate certificate_from_json(const std::string& text) {
    try {
        return certificate_from_json_impl(ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
}

namespace {
Certificate certificate_from_json_impl(const ordered_json& j) {
    Certificate c;
    c.schema_version = j.at("schema_version").get<int>();
    if (c.schema_version != 1)
        throw ParseError("unsupported certificate schema version " +
                         std::to_string(c.schema_version));
    c.digits = j.at("digits").get<int>();
    c.guard_digits = j.at("guard_digits").get<int>();
    c.branch = j.at("branch").get<std::string>();
    const mpfr_prec_t prec = PrecisionPolicy(c.digits, c.guard_digits).working_bits();
    c.series = series_from_json(j.at("series"));
    if (!j.at("detected_d").is_null()) c.detected_d = j.at("detected_d").get<int>();
    c.transformation_name = j.at("transformation").get<std::string>();
    if (!j.at("solution").is_null()) c.solution = solution_from_json(j.at("solution"), prec);
    if (!j.at("derived").is_null()) {
        DerivedCoefficients d;
        d.a = alg_from_json(j.at("derived").at("a"), prec);
        d.b = alg_from_json(j.at("derived").at("b"), prec);
        d.C = alg_from_json(j.at("derived").at("C"), prec);
        c.derived = d;
    }
    c.coefficients_match = j.at("coefficients_match").get<bool>();
    for (const auto& [name, value] : j.at("residuals").items())
        c.residuals.emplace_back(name, BigReal::from_string(value.get<std::string>(), prec));
    if (!j.at("r").is_null()) {
        mpq_class r(j.at("r").get<std::string>());
        r.canonicalize();
        c.r = r;
    }
    if (!j.at("q").is_null()) c.q = BigReal::from_string(j.at("q").get<std::string>(), prec);
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& n : j.at("notes")) c.notes.push_back(n.get<std::string>());
    return c;
}
} // namespace

void emit_certificate(const Certificate& c, const std::string& path) {
    const std::string blob = certificate_to_json(c);
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + path + "' for writing");
        out << blob;
        if (!out.good()) throw IoError("write to '" + path + "' failed");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot re-open '" + path + "' for reading");
    std::stringstream buf;
    buf << in.rdbuf();
    Certificate readback = certificate_from_json(buf.str());
    if (certificate_to_json(readback) != blob)
        throw Error("certificate round-trip mismatch for '" + path + "'");
}

} // namespace ramapi
