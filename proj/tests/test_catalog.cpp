#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ramapi/catalog.hpp"
#include "ramapi/prove.hpp"
#include "test_util.hpp"

using namespace ramapi;
using namespace testutil;

TEST_CASE("default catalog shape") {
    auto pol = policy();
    CatalogFile cat = default_catalog(pol, false);
    CHECK(cat.transformations.size() == 1);
    CHECK(cat.series.size() == 36);

    int per_level[5] = {0, 0, 0, 0, 0};
    for (const auto& s : cat.series) per_level[s.level.ell]++;
    CHECK(per_level[4] == 4);
    CHECK(per_level[2] == 12);
    CHECK(per_level[3] == 9);
    CHECK(per_level[1] == 11);

    // aliases resolve
    for (const char* alias : {"eq2", "eq3", "eq4", "eq5", "eq8", "eq9"})
        CHECK(cat.find_series(alias) != nullptr);
    CHECK(cat.find_series("eq8") == cat.find_series("l2.d5.pos"));
    CHECK(cat.find_series("nonexistent") == nullptr);

    // every row: d present, 4d >= l (needed by the alternating square roots)
    for (const auto& s : cat.series) {
        REQUIRE(s.d.has_value());
        CHECK(4 * *s.d > s.level.ell);
        if (s.z.sign() < 0) CHECK(4 * *s.d - s.level.ell > 0);
    }

    const Transformation* t = cat.find_transformation(2, 5);
    REQUIRE(t);
    CHECK(t->name == "modular-l2-d5");
    CHECK(cat.find_transformation(3, 23) == nullptr);
}

TEST_CASE("catalog validation checks the transformation identity") {
    auto pol = PrecisionPolicy(30, 20);
    CatalogFile cat = default_catalog(pol, true);
    REQUIRE(cat.transformations.size() == 1);
    CHECK(cat.transformations[0].x_hi > cat.transformations[0].x_lo);
}

TEST_CASE("round trip: parse after format is the identity") {
    auto pol = policy();
    CatalogFile cat = default_catalog(pol, false);
    std::string text = format_catalog(cat);
    CatalogFile again = parse_catalog(text, pol, false);
    CHECK(format_catalog(again) == text);
    CHECK(again.series.size() == cat.series.size());
    for (size_t i = 0; i < cat.series.size(); ++i) {
        CHECK(again.series[i].name == cat.series[i].name);
        CHECK(again.series[i].z == cat.series[i].z);
        CHECK(again.series[i].a == cat.series[i].a);
        CHECK(again.series[i].b == cat.series[i].b);
    }
    CHECK(again.transformations[0].alpha_of_x == cat.transformations[0].alpha_of_x);
    CHECK(again.transformations[0].m_squared_of_x == cat.transformations[0].m_squared_of_x);
}

TEST_CASE("catalog parsing errors") {
    auto pol = policy();

    CatalogFile empty = parse_catalog("", pol, false);
    CHECK(empty.series.empty());
    CHECK(empty.transformations.empty());

    // non-squarefree radicand normalizes at parse
    CatalogFile one = parse_catalog("[series]\n"
                                    "name = r\n"
                                    "s = 4\n"
                                    "d = 3\n"
                                    "z = 1/9\n"
                                    "a = sqrt(8)\n"
                                    "b = 1\n",
                                    pol, false);
    CHECK(one.series[0].a == parse_real_surd("2*sqrt(2)"));

    CHECK_THROWS_AS(parse_catalog("[series]\nname = x\n", pol, false), ParseError);
    CHECK_THROWS_AS(parse_catalog("garbage\n", pol, false), ParseError);
    CHECK_THROWS_AS(parse_catalog("[unknown]\nkey = 1\n", pol, false), ParseError);

    const char* dup = "[series]\nname = r\ns = 4\nd = 3\nz = 1/9\na = 1\nb = 1\n"
                      "[series]\nname = r\ns = 4\nd = 3\nz = 1/9\na = 1\nb = 1\n";
    CHECK_THROWS_AS(parse_catalog(dup, pol, false), ValidationError);

    // z out of range fails validation at parse
    const char* bad_z = "[series]\nname = r\ns = 4\nd = 3\nz = 3/2\na = 1\nb = 1\n";
    CHECK_THROWS_AS(parse_catalog(bad_z, pol, false), ValidationError);

    CHECK_THROWS_AS(load_catalog("/nonexistent/path/catalog.txt", pol, false), IoError);
}

TEST_CASE("certificates round-trip through JSON") {
    auto pol = policy();
    CatalogFile cat = default_catalog(pol, false);
    Certificate cert = prove_series(*cat.find_series("eq8"), cat, pol);
    CHECK(cert.verdict == Verdict::PROVEN_NUMERIC);

    std::string blob = certificate_to_json(cert);
    Certificate back = certificate_from_json(blob);
    CHECK(certificate_to_json(back) == blob);
    CHECK(back.verdict == cert.verdict);
    CHECK(back.series.z == cert.series.z);
    REQUIRE(back.solution.has_value());
    CHECK(*back.solution->m0.exact == *cert.solution->m0.exact);

    // emit writes and re-verifies; bogus directory raises IoError
    std::string path = "cert_roundtrip_test.json";
    emit_certificate(cert, path);
    std::ifstream in(path);
    CHECK(in.good());
    in.close();
    std::remove(path.c_str());
    CHECK_THROWS_AS(emit_certificate(cert, "/nonexistent/dir/cert.json"), IoError);

    // the alternating-series certificate records C = 1/3
    Certificate c9 = prove_series(*cat.find_series("eq9"), cat, pol);
    REQUIRE(c9.derived.has_value());
    CHECK(*c9.derived->C.exact == parse_surd("1/3"));
    std::string blob9 = certificate_to_json(c9);
    CHECK(certificate_to_json(certificate_from_json(blob9)) == blob9);

    // numeric-only fields survive with full-precision decimal strings
    Certificate v23 = prove_series(*cat.find_series("l3.d23.neg"), cat, pol);
    CHECK(v23.verdict == Verdict::VERIFIED_ONLY);
    std::string blob23 = certificate_to_json(v23);
    CHECK(certificate_to_json(certificate_from_json(blob23)) == blob23);
}

TEST_CASE("prove is deterministic") {
    auto pol = policy();
    CatalogFile cat = default_catalog(pol, false);
    Certificate a = prove_series(*cat.find_series("eq9"), cat, pol);
    Certificate b = prove_series(*cat.find_series("eq9"), cat, pol);
    CHECK(certificate_to_json(a) == certificate_to_json(b));
}

TEST_CASE("degree hint mismatch fails the certificate") {
    auto pol = policy();
    CatalogFile cat = default_catalog(pol, false);
    SeriesSpec wrong = *cat.find_series("eq8");
    wrong.d = 7; // detection will say 5
    Certificate cert = prove_series(wrong, cat, pol);
    CHECK(cert.verdict == Verdict::FAILED);
    CHECK(cert.detected_d.has_value());
    CHECK(*cert.detected_d == 5);
}
