// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <fracinv/fracinv.hpp>

#ifndef FRACINV_CLI_PATH
#define FRACINV_CLI_PATH "fracinv"
#endif

using namespace fracinv;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome run_experiment_cell(double alpha, double rho, ProfileKind kind, double m, double beta, double t_end,
                            Verdict expect, std::string& log) {
    ExperimentConfig cfg;
    cfg.params = {alpha, rho, 1};
    cfg.profile = {kind, m, beta};
    cfg.t_end = t_end;
    const auto rep = run_experiment(cfg);
    char buf[160];
    std::snprintf(buf, sizeof buf, "[m=%g beta=%g: %s slope %.4f] ", m, beta, to_string(rep.verdict),
                  rep.classifications.front().slope);
    log += buf;
    return {rep.verdict == expect, ""};
}

// 1. E_{1/2}(z) against e^{z^2} erfc(-z)
Outcome c1() {
    const auto t0 = Clock::now();
    double worst = 0;
    for (int i = 0; i <= 40; ++i) {
        const double z = -5.0 + 0.2 * i;
        const double want = std::exp(z * z) * std::erfc(-z);
        worst = std::max(worst, std::abs(mittag_leffler(0.5, 1, z).value - want) / want);
    }
    const double dt = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "41 points, worst rel %.2e (tol 1e-8), %.3f s", worst, dt);
    return {worst <= 1e-8 && dt < 1.0, buf};
}

// 2. Laplace-Wright quadrature vs direct evaluation
Outcome c2() {
    const auto t0 = Clock::now();
    double worst = 0;
    int n = 0;
    for (double a : {0.3, 0.5, 0.7})
        for (double b : {1.0, a})
            for (double z : {-3.0, -1.0, 0.0, 0.5, 1.0}) {
                const double want = mittag_leffler(a, b, z).value;
                worst = std::max(worst, std::abs(detail::laplace_wright(a, b, z) - want) / std::abs(want));
                ++n;
            }
    const double dt = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d cells, worst rel %.2e (tol 1e-6), %.3f s", n, worst, dt);
    return {worst <= 1e-6 && dt < 10.0, buf};
}

// 3. Wright moments
Outcome c3() {
    double worst = 0;
    int n = 0;
    for (double a : {0.3, 0.5, 0.8})
        for (double nu : {0.0, 0.5, 1.0, 2.0, 3.5}) {
            const double want = std::exp(std::lgamma(nu + 1) - std::lgamma(nu * a + 1));
            worst = std::max(worst, std::abs(detail::wright_moment(a, nu) - want) / want);
            ++n;
        }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d cells, worst rel %.2e (tol 1e-7)", n, worst);
    return {n == 15 && worst <= 1e-7, buf};
}

// 4. Estimate lemmas, strictly: slack must exceed the evaluation's rounding bound
Outcome c4() {
    const std::pair<int, double> cells[] = {{2, 0.5}, {2, 0.75}, {3, 0.4}, {4, 0.3}};
    int violations = 0, points = 0;
    std::string where;
    for (auto [n, a] : cells)
        for (int i = 0; i < 40; ++i) {
            const double r = std::pow(10.0, -2.0 + i * (std::log10(50.0) + 2.0) / 39.0);
            for (auto kind : {EstimateKind::Upper, EstimateKind::Lower}) {
                ++points;
                const auto m = ml_estimate_margin(kind, n, a, r);
                if (!(m.slack > m.error_bound)) {
                    if (violations++ == 0) {
                        char buf[128];
                        std::snprintf(buf, sizeof buf, "first at n=%d alpha=%g r=%.4g %s: slack %.2e, rounding %.2e", n,
                                      a, r, kind == EstimateKind::Upper ? "upper" : "lower", m.slack, m.error_bound);
                        where = buf;
                    }
                }
            }
        }
    char buf[256];
    std::snprintf(buf, sizeof buf, "%d points, %d not strict%s%s", points, violations, violations ? "; " : "",
                  where.c_str());
    return {violations == 0, buf};
}

// 5. Mass identity
Outcome c5() {
    const auto t0 = Clock::now();
    double worst = 0;
    int n = 0;
    for (double a : {0.3, 0.5, 0.7})
        for (double t : {0.5, 1.0, 2.0, 5.0}) {
            worst = std::max(worst, std::abs(total_mass(a, t).log_abs - log_mittag_leffler(a, std::pow(t, a)).log_abs));
            ++n;
        }
    const double dt = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d cells, worst log error %.2e (tol 1e-5), %.3f s", n, worst, dt);
    return {n == 12 && worst <= 1e-5 && dt < 30.0, buf};
}

// 6. Subordination vs Fourier series
Outcome c6() {
    double worst = 0;
    int n = 0;
    for (double a : {0.4, 0.5, 0.8})
        for (double t : {1.0, 2.0, 5.0})
            for (double x : {0.0, 1.0, 3.0}) {
                const double s = subordinate(a, 1.0, 1, t, x).to_double();
                const double f = solution_series(a, 1.0, t, x, 1e-7).value;
                worst = std::max(worst, std::abs(s - f) / std::abs(f));
                ++n;
            }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d cells, worst rel %.2e (tol 1e-3)", n, worst);
    return {n == 27 && worst <= 1e-3, buf};
}

// 7. Power speeds, alpha = 1/2, rho = 1
Outcome c7() {
    const auto t0 = Clock::now();
    std::string log;
    bool ok = true;
    ok &= run_experiment_cell(0.5, 1, ProfileKind::Power, 1, 0.5, 60, Verdict::Diverging, log).pass;
    ok &= run_experiment_cell(0.5, 1, ProfileKind::Power, 1, 1.5, 60, Verdict::Vanishing, log).pass;
    ok &= run_experiment_cell(0.5, 1, ProfileKind::Power, 1, 1.0, 60, Verdict::Diverging, log).pass;
    ok &= run_experiment_cell(0.5, 1, ProfileKind::Power, 20, 1.0, 60, Verdict::Vanishing, log).pass;
    const double dt = seconds_since(t0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", dt);
    return {ok && dt < 120.0, log + buf};
}

// 8. Exponential speeds, rho = 1/2
Outcome c8() {
    std::string log;
    bool ok = run_experiment_cell(0.5, 0.5, ProfileKind::Exponential, 0.2, 1, 40, Verdict::Diverging, log).pass;
    ok &= run_experiment_cell(0.5, 0.5, ProfileKind::Exponential, 0.8, 1, 40, Verdict::Vanishing, log).pass;
    return {ok, log};
}

// 9. Power speeds never outrun the Cauchy tail
Outcome c9() {
    std::string log;
    const bool ok = run_experiment_cell(0.5, 0.5, ProfileKind::Power, 1, 2, 60, Verdict::Diverging, log).pass;
    return {ok, log + "(subordination route)"};
}

// 10. rho = 3/2 along x = t^{1/4}: growth and ratio to the comparator
Outcome c10() {
    std::vector<double> lu, ratio;
    for (double t : {10.0, 20.0, 30.0}) {
        const double x = std::pow(t, 0.25);
        const double scale = std::exp(log_mittag_leffler(0.5, std::sqrt(t)).log_abs);
        const auto v = log_solution_series(0.5, 1.5, t, x, 1e-9 * scale).value;
        if (v.sign != Sign::Pos) return {false, "solution not positive"};
        lu.push_back(v.log_abs);
        ratio.push_back(v.log_abs - growth_comparator(2, 0.5, 1.5, t, 0.25, 1).log_abs);
    }
    const bool ok = lu[1] > lu[0] && lu[2] > lu[1] && ratio[1] >= ratio[0] && ratio[2] >= ratio[1];
    char buf[200];
    std::snprintf(buf, sizeof buf, "log u = %.4f, %.4f, %.4f; ratio = %.4f, %.4f, %.4f", lu[0], lu[1], lu[2],
                  std::exp(ratio[0]), std::exp(ratio[1]), std::exp(ratio[2]));
    return {ok, buf};
}

// 11. Leibniz suite
Outcome c11() {
    const auto r = run_suite(Suite::LeibnizProperties);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d/%d cases", r.cases_passed, r.cases_run);
    return {r.passed(), buf};
}

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    CliRun r;
    const std::string cmd = std::string("\"") + FRACINV_CLI_PATH + "\" " + args;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

// 12. verify --suite all, twice
Outcome c12() {
    const auto t0 = Clock::now();
    const auto a = run_cli("verify --suite all --json");
    const auto b = run_cli("verify --suite all --json");
    const double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "exit %d, %d; outputs %s; %.2f s", a.status, b.status,
                  a.out == b.out ? "identical" : "differ", dt);
    return {a.status == 0 && b.status == 0 && a.out == b.out && !a.out.empty() && dt < 300.0, buf};
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"mittag-leffler erfc oracle", c1},
        {"laplace-wright identity", c2},
        {"wright moments", c3},
        {"estimate lemmas strict", c4},
        {"mass identity", c5},
        {"subordination vs fourier", c6},
        {"power-speed dichotomy (rho=1)", c7},
        {"exponential-speed dichotomy (rho=1/2)", c8},
        {"power speeds under cauchy tails", c9},
        {"higher-order growth trend (rho=3/2)", c10},
        {"leibniz suite", c11},
        {"verify all deterministic", c12},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s criterion %2zu %-40s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    seconds_since(t0), o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
