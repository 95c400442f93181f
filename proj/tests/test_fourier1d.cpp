#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <fracinv/fourier1d.hpp>
#include <fracinv/subordination.hpp>

using namespace fracinv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Leibniz coefficients are positive, decreasing, 2a0 > a1", "[fourier1d]") {
    for (double a : {0.4, 0.8})
        for (double rho : {1.0, 1.5})
            for (double x : {2.0, 7.0}) {
                INFO("alpha=" << a << " rho=" << rho << " x=" << x);
                double prev = a_coefficient(1, a, rho, 3, x);
                const double a0 = a_coefficient(0, a, rho, 3, x);
                CHECK(a0 > 0);
                CHECK(2 * a0 > prev);
                for (int k = 2; k <= 12; ++k) {
                    const double ak = a_coefficient(k, a, rho, 3, x);
                    CHECK(ak > 0);
                    CHECK(ak < prev);
                    prev = ak;
                }
            }
}

TEST_CASE("alternating series reproduces the Gaussian at alpha = 1", "[fourier1d]") {
    CHECK_THAT(solution_series(1, 1, 1, 1, 1e-10).value, WithinRel(std::exp(0.75) / std::sqrt(4 * std::numbers::pi), 1e-8));
}

TEST_CASE("partial sums bracket the value", "[fourier1d]") {
    const double a = 0.5, rho = 1.0, t = 2.0, x = 3.0;
    const double v = solution_series(a, rho, t, x, 1e-9).value;
    double s = 0;
    for (int k = 0; k < 8; ++k) {
        s += (k % 2 ? -1.0 : 1.0) * a_coefficient(k, a, rho, t, x) / std::numbers::pi;
        if (k % 2) CHECK(s < v);
        else CHECK(s > v);
    }
}

TEST_CASE("Fourier series agrees with subordination", "[fourier1d]") {
    const double f = solution_series(0.5, 1, 1, 1, 1e-6).value;
    CHECK_THAT(f, WithinRel(subordinate(0.5, 1, 1, 1, 1).to_double(), 1e-3));
    for (double x : {0.0, 0.8, 4.0}) {
        const auto s = log_solution_series(0.7, 1.5, 5, x, 1e-9 * std::exp(log_mittag_leffler(0.7, std::pow(5, 0.7)).log_abs));
        CHECK_THAT(s.value.log_abs, WithinAbs(subordinate(0.7, 1.5, 1, 5, x).log_abs, 1e-6));
    }
}

TEST_CASE("large t stays in log form", "[fourier1d]") {
    const auto s = log_solution_series(0.5, 1, 1e6, 100, 1e300);
    CHECK(s.value.log_abs > 700);
    CHECK(std::isfinite(s.value.log_abs));
    try {
        (void)solution_series(0.5, 1, 1e6, 100, 1e-6);
        FAIL("expected an overflow error");
    } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::RangeError || e.kind() == ErrorKind::NonConvergence));
    }
}

TEST_CASE("a0 and a1 analytic bounds", "[fourier1d]") {
    CHECK(a_coefficient(0, 0.5, 1, 5, 10) >= a0_lower_bound(2, 0.5, 1, 5, 10));
    CHECK(a_coefficient(0, 0.4, 1.5, 8, 20) >= a0_lower_bound(3, 0.4, 1.5, 8, 20));
    CHECK(a_coefficient(1, 0.5, 1, 5, 10) <= a1_upper_bound(2, 0.5, 1, 5, 10));
    CHECK(a_coefficient(1, 0.75, 2, 6, 12) <= a1_upper_bound(2, 0.75, 2, 6, 12));
    // along x = m t^beta with m = 5, beta = 1/4 (x > 3 pi / 2 throughout)
    const double l = dottie();
    for (auto [n, a] : {std::pair{2, 0.5}, std::pair{3, 0.4}}) {
        auto e = [a = a](double t) { return std::exp(log_mittag_leffler(a, std::pow(t, a)).log_abs); };
        auto x = [](double t) { return 5 * std::pow(t, 0.25); };
        CHECK(std::abs(c0_term(n, a, 1.5, 40, x(40), l)) / e(40) < std::abs(c0_term(n, a, 1.5, 20, x(20), l)) / e(20));
        CHECK(std::pow(40, a * (n - 1)) * std::abs(c1_term(n, a, 1.5, 40, x(40))) / e(40) <
              std::pow(20, a * (n - 1)) * std::abs(c1_term(n, a, 1.5, 20, x(20))) / e(20));
    }
    CHECK_THROWS_AS(a0_lower_bound(2, 0.3, 1, 5, 10), Error);
}

TEST_CASE("growth comparator", "[fourier1d]") {
    // rho = 1: C = alpha / 2
    const double logE = log_mittag_leffler(0.5, std::sqrt(10.0)).log_abs;
    CHECK_THAT(growth_comparator(2, 0.5, 1, 10, 0.25, 1).log_abs,
               WithinAbs(std::log(0.25) + (0.25 - 1.0) * std::log(10.0) + logE, 1e-12));
    double prev = -1e300;
    for (double t : {10.0, 20.0, 40.0, 80.0}) {
        const double v = growth_comparator(2, 0.5, 1.5, t, 0.25, 1).log_abs;
        CHECK(v > prev);
        prev = v;
    }
}
