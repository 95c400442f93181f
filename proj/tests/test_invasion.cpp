#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <fracinv/invasion.hpp>

using namespace fracinv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<TrajectorySample> synthetic(double slope, double offset = 0.0) {
    std::vector<TrajectorySample> out;
    for (double t : default_t_grid()) {
        TrajectorySample s;
        s.t = t;
        s.log_u = LogValue::from_log(offset + slope * t);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("speed profiles", "[invasion]") {
    CHECK_THAT(theta({ProfileKind::Power, 2, 0.5}, 4), WithinRel(4.0, 1e-15));
    CHECK(theta({ProfileKind::Exponential, 1, 1}, 0) == 0.0);
    CHECK_THAT(theta({ProfileKind::Exponential, 0.5, 1}, 2), WithinRel(std::numbers::e - 1, 1e-14));
    const auto g = default_t_grid();
    REQUIRE(g.size() == 24);
    CHECK_THAT(g.front(), WithinRel(5.0, 1e-15));
    CHECK_THAT(g.back(), WithinRel(60.0, 1e-14));
    CHECK_THAT(g[1] / g[0], WithinRel(g[23] / g[22], 1e-12));
}

TEST_CASE("classify synthetic data", "[invasion]") {
    auto c = classify(synthetic(0.5));
    CHECK(c.verdict == Verdict::Diverging);
    CHECK_THAT(c.slope, WithinAbs(0.5, 1e-12));
    CHECK(classify(synthetic(-0.2)).verdict == Verdict::Vanishing);
    CHECK(classify(synthetic(0.0), 0.5, 0.01).verdict == Verdict::Inconclusive);
    // scale invariance: shifting log u changes nothing
    CHECK(classify(synthetic(0.03, 250.0)).verdict == classify(synthetic(0.03, -40.0)).verdict);
    auto few = synthetic(0.5);
    for (std::size_t i = 12; i < few.size(); ++i) few[i].error = "failed";
    CHECK(classify(few).verdict == Verdict::InsufficientData);
}

TEST_CASE("classical Gaussian trajectories have the exact slope", "[invasion]") {
    const ModelParams p{1.0, 1.0, 1};
    const std::vector<double> ts{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const auto tr = trajectory(p, {ProfileKind::Power, 1, 1}, ts, Method::Subordination);
    for (const auto& s : tr)
        CHECK_THAT(s.log_u.log_abs, WithinAbs(s.t - s.t / 4 - 0.5 * std::log(4 * std::numbers::pi * s.t), 1e-12));
    CHECK(classify(tr).verdict == Verdict::Diverging);
    // d/dt of the closed form is 3/4 - 1/(2t)
    const auto c = classify(trajectory(p, {ProfileKind::Power, 1, 1}, default_t_grid(), Method::Subordination));
    CHECK_THAT(c.slope, WithinAbs(0.75, 0.02));
    for (double m : {1.0, 3.0}) {
        const auto v = classify(trajectory(p, {ProfileKind::Power, m, 1}, default_t_grid(), Method::Subordination));
        CHECK(v.verdict == (1 - m * m / 4 > 0 ? Verdict::Diverging : Verdict::Vanishing));
    }
}

TEST_CASE("fractional trajectory grows below the power threshold", "[invasion]") {
    const auto tr = trajectory({0.5, 1.0, 1}, {ProfileKind::Power, 1, 0.5}, default_t_grid(), Method::Subordination);
    REQUIRE(tr.size() == 24);
    for (std::size_t i = 1; i < tr.size(); ++i) {
        REQUIRE(tr[i].ok());
        CHECK(tr[i].log_u.log_abs > tr[i - 1].log_u.log_abs);
        CHECK(tr[i].t > tr[i - 1].t);
    }
    auto unsupported = [](ModelParams p, Method m) {
        try {
            (void)trajectory(p, {ProfileKind::Power, 1, 0.5}, default_t_grid(), m);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::Unsupported;
        }
        return false;
    };
    CHECK(unsupported({0.5, 1.5, 2}, Method::Fourier1D));
    CHECK(unsupported({0.5, 0.7, 1}, Method::Fourier1D));
    CHECK(unsupported({0.5, 1.0, 1}, Method::EnvelopeLower));
    CHECK(unsupported({0.5, 0.7, 1}, Method::Subordination));
    CHECK(unsupported({0.5, 1.5, 3}, Method::Subordination));
}

TEST_CASE("thresholds and predictions", "[invasion]") {
    const auto th = thresholds(0.5, 1, 1);
    CHECK_THAT(th.power_lower, WithinRel(std::sqrt(3.0), 1e-14));
    CHECK_THAT(th.power_upper, WithinRel(18 * std::sqrt(1 - 0.25 / 9), 1e-14));
    const auto th2 = thresholds(0.5, 0.5, 1);
    CHECK_THAT(th2.exp_lower, WithinRel(0.375, 1e-15));
    CHECK_THAT(th2.exp_upper, WithinRel(0.5, 1e-15));
    CHECK_THAT(thresholds(0.75, 1, 1).power_upper, WithinRel(6 * std::sqrt(1 - 0.10546875 / 3), 1e-14));
    for (double a : {0.1, 0.5, 0.9})
        for (double rho : {0.3, 1.0, 2.0}) {
            const auto t = thresholds(a, rho, 2);
            CHECK(t.power_lower <= t.power_upper);
            CHECK(t.exp_lower < t.exp_upper);
            CHECK(t.exp_lower > 0);
        }
    const ModelParams p{0.5, 1, 1};
    CHECK(predict(p, {ProfileKind::Power, 1, 1}) == Prediction::Diverging);
    CHECK(predict(p, {ProfileKind::Power, 20, 1}) == Prediction::Vanishing);
    CHECK(predict(p, {ProfileKind::Power, 5, 1}) == Prediction::Gap);
    CHECK(predict(p, {ProfileKind::Power, 5, 0.5}) == Prediction::Diverging);
    CHECK(predict({0.5, 0.5, 1}, {ProfileKind::Exponential, 0.2, 1}) == Prediction::Diverging);
    CHECK(predict({0.5, 0.5, 1}, {ProfileKind::Exponential, 0.45, 1}) == Prediction::Gap);
    CHECK(predict({0.5, 0.5, 1}, {ProfileKind::Power, 1, 2}) == Prediction::Diverging);
}

TEST_CASE("experiments: gap cells are never failures", "[invasion]") {
    ExperimentConfig cfg;
    cfg.params = {0.5, 1, 1};
    cfg.profile = {ProfileKind::Power, 5, 1};
    cfg.n_samples = 8;
    const auto rep = run_experiment(cfg);
    CHECK(rep.prediction == Prediction::Gap);
    CHECK_FALSE(rep.agrees);
    CHECK(rep.samples.size() == 8);

    cfg.params = {0.5, 0.75, 1};
    cfg.profile = {ProfileKind::Power, 1, 0.5};
    const auto env = run_experiment(cfg);
    REQUIRE(env.classifications.size() == 2);
    CHECK(env.samples.size() == 16);
    CHECK(env.samples[0].method == Method::EnvelopeLower);
    CHECK(env.samples[1].method == Method::EnvelopeUpper);

    cfg.t_end = cfg.t_start;
    CHECK_THROWS_AS(run_experiment(cfg), Error);
}
