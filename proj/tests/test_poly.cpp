#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dmhap/multipoly.hpp>
#include <dmhap/numeric.hpp>
#include <dmhap/textio.hpp>

#include "test_util.hpp"

using namespace dmhap;
using dmhap::testing::random_poly;
using dmhap::testing::random_rational;
using dmhap::testing::rng;

namespace {

MultiPoly h2_identity() {
    // L^2 l1^2 + 2 L l2
    return MultiPoly::monomial(2, 1, {2, 0}, 2) + MultiPoly::monomial(2, 2, {0, 1}, 1);
}

MultiPoly h2_bernoulli() {
    // L^2 l1^2 - L l1 + 2 L l2 + 1/6
    return h2_identity() - MultiPoly::monomial(2, 1, {1, 0}, 1) +
           MultiPoly::constant(2, Rational(1, 6));
}

} // namespace

TEST_CASE("arithmetic basics") {
    MultiPoly ll1 = MultiPoly::var_l(2, 1).mul_lambda(1);
    CHECK(ll1 * ll1 == MultiPoly::monomial(2, 1, {2, 0}, 2));
    MultiPoly p = random_poly(3);
    CHECK(p * MultiPoly::constant(3, 1) == p);
    // lambda-shift: (L^2 l1^2 + 2 L l2) * L^-1
    CHECK(h2_identity() * MultiPoly::lambda_power(2, -1) ==
          MultiPoly::monomial(2, 1, {2, 0}, 1) + MultiPoly::monomial(2, 2, {0, 1}, 0));
    CHECK(h2_identity().mul_lambda(-1) == h2_identity() * MultiPoly::lambda_power(2, -1));
    CHECK_THROWS_AS(MultiPoly::zero(2) + MultiPoly::zero(3), std::invalid_argument);
}

TEST_CASE("canonical form stores no zero terms") {
    MultiPoly p = MultiPoly::var_l(1, 1) - MultiPoly::var_l(1, 1);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK(p == MultiPoly::zero(1));
    CHECK(MultiPoly::constant(1, 0).is_zero());
}

TEST_CASE("derivative_l") {
    CHECK(MultiPoly::monomial(2, 1, {2, 0}, 2).derivative_l(1) ==
          MultiPoly::monomial(2, 2, {1, 0}, 2));
    CHECK(MultiPoly::constant(2, 7).derivative_l(1).is_zero());
    CHECK(MultiPoly::constant(2, 7).derivative_l(2).is_zero());
    // d/dl2 of H_2 equals lambda^{-1} d^2/dl1^2 of H_2
    MultiPoly h2 = h2_identity();
    CHECK(h2.derivative_l(2) == MultiPoly::lambda_power(2, 1) * Rational(2));
    CHECK(h2.derivative_l(2) == h2.derivative_l(1, 2).mul_lambda(-1));
    CHECK_THROWS_AS(h2.derivative_l(3), std::invalid_argument);
    CHECK_THROWS_AS(h2.derivative_l(0), std::invalid_argument);
}

TEST_CASE("scale_vars with weighted exponents") {
    std::vector<int> w{1, 2};
    MultiPoly ll1 = MultiPoly::var_l(2, 1).mul_lambda(1);
    CHECK(ll1.scale_vars(2, w) == ll1 * Rational(2));
    MultiPoly p = random_poly(2);
    CHECK(p.scale_vars(1, w) == p);
    // weighted homogeneity of H_2: l1 has weight 1, l2 weight 2
    Rational s(7, 3);
    CHECK(h2_identity().scale_vars(s, w) == h2_identity() * (s * s));
    CHECK_THROWS_AS(p.scale_vars(2, std::vector<int>{1}), std::invalid_argument);
}

TEST_CASE("subst_lambda") {
    CHECK(h2_identity().subst_lambda(1) ==
          MultiPoly::monomial(2, 1, {2, 0}, 0) + MultiPoly::monomial(2, 2, {0, 1}, 0));
    CHECK(MultiPoly::constant(2, 5).subst_lambda(random_rational()) == MultiPoly::constant(2, 5));
    // classical Hermite-Bernoulli value at lambda = 1
    MultiPoly expected = MultiPoly::monomial(2, 1, {2, 0}, 0) - MultiPoly::monomial(2, 1, {1, 0}, 0) +
                         MultiPoly::monomial(2, 2, {0, 1}, 0) + MultiPoly::constant(2, Rational(1, 6));
    CHECK(h2_bernoulli().subst_lambda(1) == expected);
    CHECK_THROWS_AS(MultiPoly::lambda_power(1, -1).subst_lambda(0), std::domain_error);
    CHECK(MultiPoly::lambda_power(1, 2).subst_lambda(0).is_zero());
}

TEST_CASE("with_dims embeds and refuses to drop used variables") {
    MultiPoly p = MultiPoly::var_l(1, 1).mul_lambda(1);
    MultiPoly q = p.with_dims(3);
    CHECK(q.dims() == 3);
    CHECK(q == MultiPoly::var_l(3, 1).mul_lambda(1));
    CHECK(q.with_dims(1) == p);
    CHECK_THROWS_AS(MultiPoly::var_l(2, 2).with_dims(1), std::invalid_argument);
}

TEST_CASE("inverse exists exactly for lambda monomials") {
    MultiPoly unit = MultiPoly::lambda_power(2, 3) * Rational(5, 4);
    auto inv = unit.inverse();
    REQUIRE(inv.has_value());
    CHECK(unit * *inv == MultiPoly::constant(2, 1));
    CHECK_FALSE(h2_identity().inverse().has_value());
    CHECK_FALSE(MultiPoly::var_l(2, 1).inverse().has_value());
    CHECK_FALSE(MultiPoly::zero(2).inverse().has_value());
}

TEST_CASE("eval_numeric") {
    MultiPoly ll1 = MultiPoly::var_l(1, 1).mul_lambda(1);
    CHECK(eval_numeric(ll1, {BigFloat(2)}, BigFloat(0)) == 2);

    // lambda at kappa = e - 1 is 1/(e - 1)
    BigFloat e = exp(BigFloat(1));
    BigFloat got = eval_numeric(MultiPoly::lambda_power(0, 1), {}, e - 1);
    CHECK(abs(got - 1 / (e - 1)) < BigFloat("1e-140"));

    // H_2(1,1;kappa=1) = (ln 2)^2 + 2 ln 2, reference to 45 digits
    BigFloat ref("1.86674737503809204350156676924301810788155322");
    BigFloat val = eval_numeric(h2_identity(), {BigFloat(1), BigFloat(1)}, BigFloat(1));
    CHECK(abs(val - ref) < BigFloat("1e-40"));

    CHECK_THROWS_AS(eval_numeric(ll1, {BigFloat(1)}, BigFloat(-1)), std::domain_error);
    CHECK_THROWS_AS(eval_numeric(ll1, {}, BigFloat(0)), std::invalid_argument);
}

TEST_CASE("ring laws on random sparse polynomials") {
    for (int rep = 0; rep < 40; ++rep) {
        std::uniform_int_distribution<int> dims(1, 4);
        int r = dims(rng());
        MultiPoly a = random_poly(r, 20), b = random_poly(r, 20), c = random_poly(r, 20);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    for (int rep = 0; rep < 30; ++rep) {
        MultiPoly p = random_poly(2), q = random_poly(2);
        for (int j = 1; j <= 2; ++j)
            CHECK((p * q).derivative_l(j) == p.derivative_l(j) * q + p * q.derivative_l(j));
    }
}

TEST_CASE("subst_lambda is a ring homomorphism") {
    for (int rep = 0; rep < 30; ++rep) {
        MultiPoly p = random_poly(2), q = random_poly(2);
        Rational v = random_rational();
        if (v == 0) v = 2;
        CHECK((p * q).subst_lambda(v) == p.subst_lambda(v) * q.subst_lambda(v));
        CHECK((p + q).subst_lambda(v) == p.subst_lambda(v) + q.subst_lambda(v));
    }
}

TEST_CASE("numeric evaluation agrees with exact evaluation at kappa = 0") {
    for (int rep = 0; rep < 20; ++rep) {
        MultiPoly p = random_poly(3);
        std::uniform_int_distribution<int> pt(-4, 4);
        std::vector<Rational> exact_pt;
        std::vector<BigFloat> num_pt;
        for (int i = 0; i < 3; ++i) {
            int v = pt(rng());
            exact_pt.emplace_back(v);
            num_pt.emplace_back(v);
        }
        Rational exact = p.eval_exact(exact_pt, 1);
        BigFloat numeric = eval_numeric(p, num_pt, BigFloat(0));
        CHECK(abs(numeric - exact.convert_to<BigFloat>()) < BigFloat("1e-120"));
    }
}
