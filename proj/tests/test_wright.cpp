#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/airy.hpp>

#include <fracinv/quadrature.hpp>
#include <fracinv/specfun.hpp>

using namespace fracinv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
}

TEST_CASE("Wright closed forms at nu = 1/2", "[wright]") {
    CHECK_THAT(wright_neg(0.5, 0.5, -1).value, WithinRel(0.4393912894677224, 1e-13));
    CHECK_THAT(wright_neg(0.5, 1.0, -1).value, WithinRel(0.4795001221869535, 1e-13));
    for (double mu : {0.3, 1.0, 2.5}) CHECK_THAT(wright_neg(0.4, mu, 0).value, WithinRel(reciprocal_gamma(mu), 1e-15));
    for (double x : {0.1, 2.0, 5.0, 9.0, 14.0, 20.0, 30.0}) {
        INFO("x=" << x);
        CHECK_THAT(wright_neg(0.5, 0.5, -x).value, WithinRel(std::exp(-x * x / 4) / kSqrtPi, 1e-12));
        CHECK_THAT(wright_neg(0.5, 1.0, -x).value, WithinRel(std::erfc(x / 2), 1e-11));
    }
}

TEST_CASE("log Wright reaches far below the double range", "[wright]") {
    for (double x : {40.0, 60.0, 100.0}) {
        const auto v = log_wright_neg(0.5, 0.5, -x);
        CHECK(v.sign == Sign::Pos);
        CHECK_THAT(v.log_abs, WithinRel(-x * x / 4 - std::log(kSqrtPi), 1e-13));
    }
}

TEST_CASE("M-Wright at nu = 1/3 is an Airy function", "[wright]") {
    const double c = std::cbrt(3.0);
    for (double x : {0.5, 2.0, 6.0, 15.0, 40.0}) {
        INFO("x=" << x);
        const double airy = c * c * boost::math::airy_ai(x / c);
        CHECK_THAT(wright_neg(1.0 / 3, 2.0 / 3, -x).value, WithinRel(airy, 1e-10));
        CHECK_THAT(log_wright_neg(1.0 / 3, 2.0 / 3, -x).log_abs, WithinAbs(std::log(airy), 1e-10));
    }
}

TEST_CASE("Wright against frozen high-precision series", "[wright]") {
    CHECK_THAT(wright_neg(0.3, 0.7, -10).value, WithinRel(4.6816026111378420535e-6, 1e-10));
    CHECK_THAT(wright_neg(0.75, 0.25, -3).value, WithinRel(0.00035126361023134093759, 1e-9));
    CHECK_THAT(wright_neg(0.75, 0.25, -4.5).value, WithinRel(4.444801805788417907e-19, 1e-8));
    CHECK_THAT(wright_neg(0.6, 1.0, -6).value, WithinRel(9.3997777510277046299e-9, 1e-10));
    CHECK_THAT(wright_neg(0.2, 0.8, -40).value, WithinRel(8.6361535389178746314e-25, 1e-10));
    CHECK_THAT(wright_neg(0.9, 0.1, -1.2).value, WithinRel(1.4708020405379754517, 1e-10));
}

TEST_CASE("M-Wright density integrates to one", "[wright]") {
    for (double nu : {0.2, 0.5, 0.8}) {
        const auto r = integrate([&](double x) { return wright_neg(nu, 1 - nu, -x).value; }, 0.0, 60.0,
                                 {1e-13, 1e-11, 2000});
        CHECK_THAT(r.value, WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("Wright tail asymptotic", "[wright]") {
    // Y = 25 at nu = 1/2, |z| = 10.
    const double lA0 = -0.5 * std::log(std::numbers::pi);
    CHECK_THAT(log_wright_tail(0.5, 0.5, -10).log_abs, WithinAbs(-25 + lA0, 1e-12));
    CHECK_THAT(log_wright_tail(0.5, 1.0, -10).log_abs, WithinAbs(-0.5 * std::log(25.0) - 25 + lA0, 1e-12));
    for (double mu : {0.5, 1.0}) {
        const double ratio = std::exp(log_wright_tail(0.5, mu, -10).log_abs - log_wright_neg(0.5, mu, -10).log_abs);
        CHECK(std::abs(ratio - 1) < 0.05);
    }
    for (double nu : {0.25, 0.7}) {
        auto err = [&](double x) {
            return std::abs(log_wright_tail(nu, 0.6, -x).log_abs - log_wright_neg(nu, 0.6, -x).log_abs);
        };
        CHECK(err(30) < err(10));
        CHECK(err(30) < 0.05);
    }
    CHECK_THROWS_AS(log_wright_tail(0.5, 0.5, -1), Error);
}

TEST_CASE("Wright argument checks", "[wright]") {
    CHECK_THROWS_AS(wright_neg(1.0, 0.5, -1), Error);
    CHECK_THROWS_AS(wright_neg(0.5, 0.5, 1), Error);
    CHECK_THROWS_AS(wright_neg(0.0, 0.5, -1), Error);
}
