#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dmhap/suites.hpp>
#include <dmhap/textio.hpp>

#include "test_util.hpp"

using namespace dmhap;
using dmhap::testing::random_poly;

namespace {

MultiPoly h2_identity() {
    return MultiPoly::monomial(2, 1, {2, 0}, 2) + MultiPoly::monomial(2, 2, {0, 1}, 1);
}

MultiPoly h2_bernoulli() {
    return h2_identity() - MultiPoly::monomial(2, 1, {1, 0}, 1) +
           MultiPoly::constant(2, Rational(1, 6));
}

} // namespace

TEST_CASE("canonical text rendering") {
    CHECK(to_text(h2_identity()) == "L^2*l1^2 + 2*L*l2");
    CHECK(to_text(h2_bernoulli()) == "L^2*l1^2 - L*l1 + 2*L*l2 + 1/6");
    CHECK(to_text(MultiPoly::zero(2)) == "0");
    CHECK(to_text(MultiPoly::constant(1, Rational(-1, 2))) == "-1/2");
    CHECK(to_text(MultiPoly::lambda_power(0, -1)) == "L^-1");
    CHECK(to_text(MultiPoly::var_l(1, 1).mul_lambda(1)) == "L*l1");
    // three-variable ordering: higher total degree first, then lexicographic
    MultiPoly f3 = MultiPoly::monomial(3, 1, {3, 0, 0}, 3) + MultiPoly::monomial(3, 6, {1, 1, 0}, 2) +
                   MultiPoly::monomial(3, 6, {0, 0, 1}, 1);
    CHECK(to_text(f3) == "L^3*l1^3 + 6*L^2*l1*l2 + 6*L*l3");
}

TEST_CASE("latex rendering") {
    CHECK(to_latex(h2_identity()) == "\\lambda^{2} l_{1}^{2} + 2 \\lambda l_{2}");
    CHECK(to_latex(MultiPoly::constant(1, Rational(1, 6))) == "\\frac{1}{6}");
    CHECK(to_latex(MultiPoly::zero(1)) == "0");
}

TEST_CASE("parse inverts the canonical rendering") {
    CHECK(parse_poly("L^2*l1^2 + 2*L*l2", 2) == h2_identity());
    CHECK(parse_poly("0", 4) == MultiPoly::zero(4));
    CHECK(parse_poly("-1/2", 1) == MultiPoly::constant(1, Rational(-1, 2)));
    CHECK(parse_poly("L^-1", 0) == MultiPoly::lambda_power(0, -1));
    CHECK_THROWS_AS(parse_poly("l3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("= 1", 2), std::invalid_argument);
}

TEST_CASE("text round-trip is idempotent on generated tables and random polys") {
    for (const char* name : {"identity", "bernoulli", "euler", "genocchi"}) {
        Table t = generate(AppellFamily::by_name(name), 3, 6);
        for (const MultiPoly& p : t.entries) {
            std::string text = to_text(p);
            MultiPoly q = parse_poly(text, 3);
            CHECK(q == p);
            CHECK(to_text(q) == text);
        }
    }
    for (int rep = 0; rep < 25; ++rep) {
        MultiPoly p = random_poly(3, 8);
        CHECK(parse_poly(to_text(p), 3) == p);
    }
}

TEST_CASE("table documents") {
    Table t = generate(AppellFamily::identity(), 2, 2);
    nlohmann::json doc = table_document(t);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["family"] == "identity");
    CHECK(doc["r"] == 2);
    CHECK(doc["N"] == 2);
    CHECK(doc["lambda_symbol"] == "L");
    CHECK(doc["entries"].size() == 3);
    CHECK(doc["entries"][2]["n"] == 2);
    CHECK(doc["entries"][2]["poly"] == "L^2*l1^2 + 2*L*l2");

    std::string csv = table_csv(t);
    CHECK(csv.rfind("n,polynomial_text\n", 0) == 0);
    CHECK(csv.find("2,L^2*l1^2 + 2*L*l2") != std::string::npos);

    std::string latex = table_latex(t);
    CHECK(latex.find("\\begin{align*}") != std::string::npos);
    CHECK(latex.find("\\lambda^{2} l_{1}^{2} + 2 \\lambda l_{2}") != std::string::npos);
}

TEST_CASE("report documents carry the fixed field set") {
    IdentityReport rep = check_scaling(AppellFamily::bernoulli(), 1, 1, 1, 2);
    nlohmann::json doc = report_document(rep);
    CHECK(doc["identity_id"] == "scaling_3_1");
    CHECK(doc["family"] == "bernoulli");
    CHECK(doc["r"] == 1);
    CHECK(doc["n"] == 1);
    CHECK(doc["I"] == 1);
    CHECK(doc["S"] == 2);
    CHECK(doc["pass"] == false);
    CHECK(doc["residual_text"] == "1/2");
    CHECK(doc.contains("notes"));
}

TEST_CASE("suite driver aggregates checks and reports") {
    SuiteResult res = run_suite("monomiality", AppellFamily::euler(), 2, 4, 2, 3);
    CHECK(res.promoted_pass());
    CHECK(res.checks.size() == 4);

    SuiteResult sc = run_suite("scaling", AppellFamily::bernoulli(), 1, 2, 1, 2);
    CHECK(sc.promoted_pass()); // not promoted for bernoulli
    CHECK(sc.reports.size() == 3);
    CHECK_FALSE(sc.reports[1].pass);

    SuiteResult sci = run_suite("scaling", AppellFamily::identity(), 2, 4, 2, 3);
    CHECK(sci.promoted_pass());
    CHECK(sci.checks.at(0).promoted);

    CHECK_THROWS_AS(run_suite("monomiality", AppellFamily::genocchi(), 2, 3, 2, 3),
                    UnsupportedOperatorError);
    CHECK_THROWS_AS(run_suite("nope", AppellFamily::identity(), 2, 3, 2, 3),
                    std::invalid_argument);

    // run_all_suites records the genocchi operator suite as skipped
    std::vector<SuiteResult> all = run_all_suites(AppellFamily::genocchi(), 2, 3, 2, 3);
    CHECK(all.size() == suite_names().size());
    bool found_skip = false;
    for (const SuiteResult& r : all) {
        if (r.suite == "monomiality") {
            REQUIRE(r.checks.size() == 1);
            CHECK(r.checks[0].name == "skipped");
            CHECK_FALSE(r.checks[0].promoted);
            found_skip = true;
        }
        CHECK(r.promoted_pass());
    }
    CHECK(found_skip);
}
