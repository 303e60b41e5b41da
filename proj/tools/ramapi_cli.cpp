#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "ramapi/catalog.hpp"
#include "ramapi/prove.hpp"

using namespace ramapi;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CliConfig {
    int digits = 50;
    int guard = 20;
    std::string branch = "lower";
    std::string catalog_path = "default";
    int dmax = 60;
    std::string output = "text";
    bool skip_validate = false;

    PrecisionPolicy policy() const { return PrecisionPolicy(digits, guard); }
    BranchPolicy branch_policy() const {
        return BranchPolicy{branch == "upper" ? BranchSide::upper : BranchSide::lower};
    }
    bool json() const { return output == "json"; }
    CatalogFile load() const {
        if (catalog_path == "default" || catalog_path.empty())
            return default_catalog(policy(), !skip_validate);
        return load_catalog(catalog_path, policy(), !skip_validate);
    }
};

std::string num(const BigReal& v, const CliConfig& cfg) { return v.str(cfg.digits); }

std::string cnum(const BigComplex& v, const CliConfig& cfg) {
    if (v.im.is_zero()) return num(v.re, cfg);
    return num(v.re, cfg) + (v.im.is_negative() ? " - " : " + ") + num(abs(v.im), cfg) + "*i";
}

ordered_json alg_json(const AlgValue& v, const CliConfig& cfg) {
    ordered_json j;
    j["exact"] = v.exact ? ordered_json(v.exact->str()) : ordered_json(nullptr);
    j["re"] = num(v.approx.re, cfg);
    j["im"] = num(v.approx.im, cfg);
    return j;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

const SeriesSpec& pick_series(const CatalogFile& cat, const std::string& key) {
    const SeriesSpec* s = cat.find_series(key);
    if (!s) throw ValidationError("no series named '" + key + "' in the catalog");
    return *s;
}

SeriesSpec adhoc_series(int s, const std::string& z, const std::string& a, const std::string& b,
                        std::optional<int> d) {
    SeriesSpec spec;
    spec.name = "adhoc";
    spec.level = LevelParam::from_s(s);
    spec.z = parse_real_surd(z);
    spec.a = parse_real_surd(a);
    spec.b = parse_real_surd(b);
    spec.d = d;
    validate_series_spec(spec);
    return spec;
}

int cmd_eval_series(const CliConfig& cfg, const SeriesSpec& spec) {
    SeriesValue v = evaluate_series(spec, cfg.policy());
    BigReal invpi = BigReal(1L, v.value.prec()) / BigReal::pi(v.value.prec());
    BigReal resid = abs(v.value - invpi);
    if (cfg.json()) {
        ordered_json j;
        j["series"] = spec.name;
        j["value"] = num(v.value, cfg);
        j["tail_bound"] = num(v.tail_bound, cfg);
        j["terms"] = v.terms;
        j["accelerated"] = v.accelerated;
        j["residual_vs_inv_pi"] = num(resid, cfg);
        print_json(j);
    } else {
        std::cout << "series = " << spec.name << "\n";
        std::cout << "value = " << num(v.value, cfg) << "\n";
        std::cout << "tail_bound = " << num(v.tail_bound, cfg) << "\n";
        std::cout << "residual_vs_inv_pi = " << num(resid, cfg) << "\n";
    }
    return 0;
}

int cmd_verify_tables(const CliConfig& cfg) {
    CatalogFile cat = cfg.load();
    PrecisionPolicy pol = cfg.policy();
    int pass = 0;
    ordered_json rows = ordered_json::array();
    for (const auto& spec : cat.series) {
        BigReal resid = verify_series(spec, pol);
        bool ok = resid < series_pass_threshold(spec, pol);
        if (ok) ++pass;
        if (cfg.json()) {
            ordered_json r;
            r["name"] = spec.name;
            r["pass"] = ok;
            r["residual"] = num(resid, cfg);
            rows.push_back(r);
        } else {
            std::cout << (ok ? "PASS " : "FAIL ") << spec.name
                      << " residual = " << num(resid, cfg) << "\n";
        }
    }
    int total = static_cast<int>(cat.series.size());
    if (cfg.json()) {
        ordered_json j;
        j["rows"] = rows;
        j["pass"] = pass;
        j["total"] = total;
        print_json(j);
    } else {
        std::cout << pass << "/" << total << " PASS\n";
    }
    return pass == total ? 0 : 1;
}

int cmd_detect_degree(const CliConfig& cfg, int s, const std::string& zlit) {
    DegreeDetection det = detect_degree(LevelParam::from_s(s), parse_real_surd(zlit), cfg.dmax,
                                        cfg.branch_policy(), cfg.policy());
    if (cfg.json()) {
        ordered_json j;
        j["d"] = det.d;
        j["modulus"] = num(det.modulus, cfg);
        print_json(j);
    } else {
        std::cout << "d = " << det.d << "\n";
        std::cout << "modulus = " << num(det.modulus, cfg) << "\n";
    }
    return 0;
}

void print_point_text(const SolutionPoint& sp, const CliConfig& cfg) {
    std::cout << "point z0 = " << sp.z0.str(cfg.digits)
              << (sp.branch_consistent ? "  [branch-consistent]" : "") << "\n";
    std::cout << "  x0 = " << sp.x0.str(cfg.digits) << "\n";
    std::cout << "  alpha0 = " << sp.alpha0.str(cfg.digits) << "\n";
    std::cout << "  beta0 = " << sp.beta0.str(cfg.digits) << "\n";
    std::cout << "  m0 = " << sp.m0.str(cfg.digits) << "\n";
    std::cout << "  alpha0' = " << sp.alpha0_prime.str(cfg.digits) << "\n";
    std::cout << "  beta0' = " << sp.beta0_prime.str(cfg.digits) << "\n";
    std::cout << "  m0' = " << sp.m0_prime.str(cfg.digits) << "\n";
}

ordered_json point_json(const SolutionPoint& sp, const CliConfig& cfg) {
    ordered_json j;
    j["z0"] = alg_json(sp.z0, cfg);
    j["x0"] = alg_json(sp.x0, cfg);
    j["alpha0"] = alg_json(sp.alpha0, cfg);
    j["beta0"] = alg_json(sp.beta0, cfg);
    j["m0"] = alg_json(sp.m0, cfg);
    j["alpha0_prime"] = alg_json(sp.alpha0_prime, cfg);
    j["beta0_prime"] = alg_json(sp.beta0_prime, cfg);
    j["m0_prime"] = alg_json(sp.m0_prime, cfg);
    j["branch_consistent"] = sp.branch_consistent;
    j["all_exact"] = sp.all_exact;
    return j;
}

const Transformation& pick_transformation(const CatalogFile& cat, const std::string& name) {
    if (name.empty()) {
        if (cat.transformations.empty())
            throw ValidationError("the catalog has no transformations");
        return cat.transformations.front();
    }
    const Transformation* t = cat.find_transformation(name);
    if (!t) throw ValidationError("no transformation named '" + name + "' in the catalog");
    return *t;
}

int cmd_solve_transform(const CliConfig& cfg, const std::string& name) {
    CatalogFile cat = cfg.load();
    const Transformation& t = pick_transformation(cat, name);
    auto pts = solve_beta_complement(t, cfg.branch_policy(), cfg.policy());
    if (cfg.json()) {
        ordered_json j;
        j["transformation"] = t.name;
        ordered_json arr = ordered_json::array();
        for (const auto& sp : pts) arr.push_back(point_json(sp, cfg));
        j["points"] = arr;
        print_json(j);
    } else {
        std::cout << "transformation = " << t.name << " (" << pts.size() << " points)\n";
        for (const auto& sp : pts) print_point_text(sp, cfg);
    }
    return 0;
}

int cmd_derive_coefficients(const CliConfig& cfg, const std::string& name,
                            const std::string& zlit) {
    CatalogFile cat = cfg.load();
    const Transformation& t = pick_transformation(cat, name);
    SurdExpr z = parse_real_surd(zlit);
    PrecisionPolicy pol = cfg.policy();
    auto pts = solve_beta_complement(t, cfg.branch_policy(), pol);
    BigReal tol = BigReal::pow10(5 - pol.target_digits, pol.working_bits());
    BigComplex zv(z.eval(pol.working_bits()), BigReal(pol.working_bits()));
    const SolutionPoint* chosen = nullptr;
    for (const auto& sp : pts) {
        bool match = sp.z0.is_exact() ? (*sp.z0.exact == ComplexSurd(z))
                                      : (abs(sp.z0.approx - zv) < tol);
        if (match && (sp.branch_consistent || !chosen)) chosen = &sp;
        if (match && sp.branch_consistent) break;
    }
    if (!chosen) throw ValidationError("no solution point of '" + t.name + "' induces z = " + zlit);
    DerivedCoefficients dc = derive_coefficients(*chosen, pol);
    if (cfg.json()) {
        ordered_json j;
        j["transformation"] = t.name;
        j["z"] = z.str();
        j["a"] = alg_json(dc.a, cfg);
        j["b"] = alg_json(dc.b, cfg);
        j["C"] = alg_json(dc.C, cfg);
        print_json(j);
    } else {
        std::cout << "a = " << dc.a.str(cfg.digits) << "\n";
        std::cout << "b = " << dc.b.str(cfg.digits) << "\n";
        std::cout << "C = " << dc.C.str(cfg.digits) << "\n";
    }
    return 0;
}

int cmd_residual(const CliConfig& cfg, int s, const std::string& alpha_lit, bool legendre) {
    PrecisionPolicy pol = cfg.policy();
    ComplexSurd alpha = parse_surd(alpha_lit);
    BigComplex av = alpha.eval(pol.working_bits());
    LevelParam lp = LevelParam::from_s(s);
    BigReal resid = legendre ? legendre_residual(lp, av, cfg.branch_policy(), pol)
                             : clausen_residual(lp, av, pol);
    if (cfg.json()) {
        ordered_json j;
        j["check"] = legendre ? "legendre" : "clausen";
        j["s"] = s;
        j["alpha"] = alpha.str();
        j["residual"] = num(resid, cfg);
        print_json(j);
    } else {
        std::cout << "residual = " << num(resid, cfg) << "\n";
    }
    return 0;
}

int cmd_q_modulus(const CliConfig& cfg, const std::string& series_key) {
    CatalogFile cat = cfg.load();
    SeriesSpec spec = pick_series(cat, series_key);
    PrecisionPolicy pol = cfg.policy();
    if (!spec.d) {
        DegreeDetection det =
            detect_degree(spec.level, spec.z, cfg.dmax, cfg.branch_policy(), pol);
        spec.d = det.d;
    }
    ModularQ mq = modular_q(spec, pol);
    if (cfg.json()) {
        ordered_json j;
        j["series"] = spec.name;
        j["r"] = to_string(mq.r);
        j["q"] = num(mq.q, cfg);
        j["surd_check_ran"] = mq.surd_check_ran;
        j["surd_check_ok"] = mq.surd_check_ok;
        print_json(j);
    } else {
        std::cout << "r = " << to_string(mq.r) << "\n";
        std::cout << "q = " << num(mq.q, cfg) << "\n";
        if (mq.surd_check_ran)
            std::cout << "surd_check_4r = " << (mq.surd_check_ok ? "PASS" : "FAIL") << "\n";
    }
    return mq.surd_check_ran && !mq.surd_check_ok ? 1 : 0;
}

int cmd_prove(const CliConfig& cfg, const std::string& series_key, bool all,
              const std::string& emit_path) {
    CatalogFile cat = cfg.load();
    PrecisionPolicy pol = cfg.policy();
    ProveOptions opt;
    opt.dmax = cfg.dmax;
    opt.branch = cfg.branch_policy();

    std::vector<const SeriesSpec*> targets;
    if (all) {
        for (const auto& s : cat.series) targets.push_back(&s);
    } else {
        targets.push_back(&pick_series(cat, series_key));
    }

    if (all && !emit_path.empty())
        std::cerr << "warning: --emit is ignored with --all\n";

    bool any_fail = false;
    ordered_json arr = ordered_json::array();
    for (const SeriesSpec* spec : targets) {
        Certificate cert = prove_series(*spec, cat, pol, opt);
        if (cert.verdict == Verdict::FAILED) any_fail = true;
        if (!emit_path.empty() && !all) emit_certificate(cert, emit_path);
        if (cfg.json()) {
            arr.push_back(ordered_json::parse(certificate_to_json(cert)));
        } else {
            std::cout << spec->name << ": " << to_string(cert.verdict);
            if (cert.detected_d) std::cout << " (detected d = " << *cert.detected_d << ")";
            std::cout << "\n";
            for (const auto& n : cert.notes) std::cout << "  note: " << n << "\n";
        }
    }
    if (cfg.json()) print_json(all ? ordered_json(arr) : arr.front());
    return any_fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbitrary-precision prover and verifier for Ramanujan series for 1/pi"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand
    CliConfig cfg;
    app.add_option("--digits", cfg.digits, "target decimal digits")
        ->envname("RAMAPI_DIGITS")
        ->check(CLI::Range(10, 100000));
    app.add_option("--guard", cfg.guard, "extra working digits")->check(CLI::Range(10, 100000));
    app.add_option("--branch", cfg.branch, "half-plane for arguments past the cut")
        ->check(CLI::IsMember({"lower", "upper"}));
    app.add_option("--catalog", cfg.catalog_path, "catalog path or 'default'")
        ->envname("RAMAPI_CATALOG");
    app.add_option("--dmax", cfg.dmax, "largest degree tried by detection");
    app.add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--skip-validate", cfg.skip_validate, "skip catalog validation at load");

    // eval-series
    auto* eval_cmd = app.add_subcommand("eval-series", "evaluate one series at full precision");
    std::string sel_series;
    int adhoc_s = 4;
    std::string adhoc_z, adhoc_a, adhoc_b;
    std::optional<int> adhoc_d;
    eval_cmd->add_option("--series", sel_series, "series name or alias from the catalog");
    eval_cmd->add_option("--s", adhoc_s, "s in {2,3,4,6} for an ad-hoc series");
    eval_cmd->add_option("--z", adhoc_z, "z literal for an ad-hoc series");
    eval_cmd->add_option("--a", adhoc_a, "a literal for an ad-hoc series");
    eval_cmd->add_option("--b", adhoc_b, "b literal for an ad-hoc series");

    // verify-tables
    app.add_subcommand("verify-tables", "verify every catalog row against 1/pi");

    // detect-degree
    auto* det_cmd = app.add_subcommand("detect-degree", "identify d from |F(alpha0)/F(beta0)|");
    int det_s = 3;
    std::string det_z;
    det_cmd->add_option("--s", det_s, "s in {2,3,4,6}")->required();
    det_cmd->add_option("--z", det_z, "z literal")->required();

    // solve-transform
    auto* solve_cmd = app.add_subcommand("solve-transform", "solve beta = 1 - alpha");
    std::string tname;
    solve_cmd->add_option("--name", tname, "transformation name (default: first)");

    // derive-coefficients
    auto* der_cmd = app.add_subcommand("derive-coefficients",
                                       "derive (a, b, C) from a solution point");
    std::string der_name, der_z;
    der_cmd->add_option("--name", der_name, "transformation name (default: first)");
    der_cmd->add_option("--z", der_z, "z literal selecting the solution point")->required();

    // legendre-check / clausen-check
    auto* leg_cmd = app.add_subcommand("legendre-check", "Legendre relation residual");
    int leg_s = 4;
    std::string leg_alpha;
    leg_cmd->add_option("--s", leg_s)->required();
    leg_cmd->add_option("--alpha", leg_alpha, "alpha literal")->required();
    auto* cla_cmd = app.add_subcommand("clausen-check", "Clausen identity residual");
    int cla_s = 4;
    std::string cla_alpha;
    cla_cmd->add_option("--s", cla_s)->required();
    cla_cmd->add_option("--alpha", cla_alpha, "alpha literal")->required();

    // q-modulus
    auto* q_cmd = app.add_subcommand("q-modulus", "modular variable q and ratio r");
    std::string q_series;
    q_cmd->add_option("--series", q_series, "series name or alias")->required();

    // prove
    auto* prove_cmd = app.add_subcommand("prove", "run the full proof pipeline");
    std::string prove_sel, emit_path;
    bool prove_all = false;
    prove_cmd->add_option("--series", prove_sel, "series name or alias");
    prove_cmd->add_flag("--all", prove_all, "prove every catalog row");
    prove_cmd->add_option("--emit", emit_path, "write the certificate JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) {
            SeriesSpec spec;
            if (!sel_series.empty()) {
                spec = pick_series(cfg.load(), sel_series);
            } else if (!adhoc_z.empty() && !adhoc_a.empty() && !adhoc_b.empty()) {
                spec = adhoc_series(adhoc_s, adhoc_z, adhoc_a, adhoc_b, adhoc_d);
            } else {
                std::cerr << "eval-series needs --series or all of --s/--z/--a/--b\n";
                return 2;
            }
            return cmd_eval_series(cfg, spec);
        }
        if (app.get_subcommand("verify-tables")->parsed()) return cmd_verify_tables(cfg);
        if (det_cmd->parsed()) return cmd_detect_degree(cfg, det_s, det_z);
        if (solve_cmd->parsed()) return cmd_solve_transform(cfg, tname);
        if (der_cmd->parsed()) return cmd_derive_coefficients(cfg, der_name, der_z);
        if (leg_cmd->parsed()) return cmd_residual(cfg, leg_s, leg_alpha, true);
        if (cla_cmd->parsed()) return cmd_residual(cfg, cla_s, cla_alpha, false);
        if (q_cmd->parsed()) return cmd_q_modulus(cfg, q_series);
        if (prove_cmd->parsed()) {
            if (!prove_all && prove_sel.empty()) {
                std::cerr << "prove needs --series or --all\n";
                return 2;
            }
            return cmd_prove(cfg, prove_sel, prove_all, emit_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
