#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dmhap/appell.hpp>
#include <dmhap/textio.hpp>

using namespace dmhap;

namespace {

// (e^xi - 1)/xi
Series<Rational> expm1_over_xi(int order) {
    std::vector<Rational> c;
    for (int k = 0; k <= order; ++k) c.emplace_back(1, factorial(k + 1));
    return Series<Rational>::make(std::move(c));
}

} // namespace

TEST_CASE("family_series built-ins") {
    CHECK(AppellFamily::identity().series(5).coeffs() ==
          std::vector<Rational>{1, 0, 0, 0, 0, 0});
    CHECK(AppellFamily::bernoulli().series(2).coeffs() ==
          std::vector<Rational>{1, Rational(-1, 2), Rational(1, 12)});
    // Genocchi numbers 0,1,-1,0,1 via extract, i.e. xi times the Euler series
    AppellFamily gen = AppellFamily::genocchi();
    CHECK(gen.numbers(4) == std::vector<Rational>{0, 1, -1, 0, 1});
}

TEST_CASE("bernoulli series inverts (e^xi-1)/xi at every order up to 20") {
    for (int n = 0; n <= 20; ++n) {
        Series<Rational> prod = AppellFamily::bernoulli().series(n) * expm1_over_xi(n);
        for (int k = 0; k <= n; ++k) CHECK(prod.coeff(k) == (k == 0 ? 1 : 0));
    }
}

TEST_CASE("genocchi series is xi times the euler series") {
    Series<Rational> g = AppellFamily::genocchi().series(12);
    Series<Rational> e = AppellFamily::euler().series(12);
    CHECK(g.coeff(0) == 0);
    for (int k = 1; k <= 12; ++k) CHECK(g.coeff(k) == e.coeff(k - 1));
}

TEST_CASE("appell numbers") {
    auto id = AppellFamily::identity().numbers(6);
    CHECK(id[0] == 1);
    for (int k = 1; k <= 6; ++k) CHECK(id[k] == 0);

    // odd Bernoulli numbers vanish from 3 on
    auto bern = AppellFamily::bernoulli().numbers(9);
    CHECK(bern[3] == 0);
    CHECK(bern[5] == 0);
    CHECK(bern[2] == Rational(1, 6));

    // integer Euler numbers come from 2e^xi/(e^{2 xi}+1)
    auto euler = euler_integer_numbers(6);
    CHECK(euler == std::vector<Rational>{1, 0, -1, 0, 5, 0, -61});
    // distinct from the determining-series coefficients of 2/(e^xi+1)
    auto euler_poly = AppellFamily::euler().numbers(3);
    CHECK(euler_poly == std::vector<Rational>{1, Rational(-1, 2), 0, Rational(1, 4)});
}

TEST_CASE("log_derivative") {
    Series<Rational> id = AppellFamily::identity().log_derivative(6);
    for (int k = 0; k <= 6; ++k) CHECK(id.coeff(k) == 0);
    CHECK(AppellFamily::bernoulli().log_derivative(1).coeff(0) == Rational(-1, 2));
    CHECK(AppellFamily::euler().log_derivative(1).coeff(0) == Rational(-1, 2));
    CHECK_THROWS_AS(AppellFamily::genocchi().log_derivative(3), UnsupportedOperatorError);

    // A'/A * A == A' for every built-in with a unit constant term
    for (const char* name : {"identity", "bernoulli", "euler"}) {
        AppellFamily f = AppellFamily::by_name(name);
        Series<Rational> a = f.series(9);
        CHECK(f.log_derivative(8) * a.truncated(8) == f.series(9).derivative());
    }
}

TEST_CASE("classical_appell_poly") {
    CHECK(AppellFamily::identity().classical_poly(2) == MultiPoly::monomial(1, 1, {2}, 0));
    CHECK(AppellFamily::bernoulli().classical_poly(1) ==
          MultiPoly::monomial(1, 1, {1}, 0) + MultiPoly::constant(1, Rational(-1, 2)));
    CHECK(AppellFamily::bernoulli().classical_poly(2) ==
          MultiPoly::monomial(1, 1, {2}, 0) - MultiPoly::monomial(1, 1, {1}, 0) +
              MultiPoly::constant(1, Rational(1, 6)));
}

TEST_CASE("appell differential property d/dl1 A_n = n A_{n-1}") {
    for (const char* name : {"identity", "bernoulli", "euler", "genocchi"}) {
        AppellFamily f = AppellFamily::by_name(name);
        for (int n = 1; n <= 12; ++n) {
            CHECK(f.classical_poly(n).derivative_l(1) == f.classical_poly(n - 1) * Rational(n));
        }
    }
}

TEST_CASE("family lookup and capability flags") {
    CHECK(AppellFamily::by_name("euler").name() == "euler");
    CHECK_THROWS_AS(AppellFamily::by_name("hermit"), std::invalid_argument);
    CHECK_THROWS_AS(AppellFamily::by_name("custom"), std::invalid_argument);

    CHECK(AppellFamily::identity().supports_operators());
    CHECK(AppellFamily::bernoulli().supports_operators());
    CHECK(AppellFamily::euler().supports_operators());
    CHECK_FALSE(AppellFamily::genocchi().supports_operators());

    AppellFamily c = AppellFamily::custom("mine", {2, 1, Rational(1, 3)});
    CHECK(c.a0() == 2);
    CHECK(c.supports_operators());
    CHECK(c.numbers(4) == std::vector<Rational>{2, 1, Rational(1, 3), 0, 0});

    AppellFamily z = AppellFamily::custom("zero-head", {0, 1});
    CHECK_FALSE(z.supports_operators());
    CHECK_THROWS_AS(z.log_derivative(2), UnsupportedOperatorError);
    CHECK_THROWS_AS(AppellFamily::custom("empty", {}), std::invalid_argument);
}
