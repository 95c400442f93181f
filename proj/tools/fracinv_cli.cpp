// fracinv: point evaluations, kernels, solutions, invasion experiments, verify runner.
//
// Exit codes: 0 ok, 1 usage error, 2 computation failure, 3 verify suite failed.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <fracinv/fracinv.hpp>
#include <fracinv/io.hpp>

namespace {

using namespace fracinv;
using io::fmt10;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;
constexpr int kVerifyFailed = 3;

constexpr double kInfD = std::numeric_limits<double>::infinity();

// Numeric range check that runs before conversion, so the message names the flag.
CLI::Validator interval(double lo, double hi, bool lo_open, bool hi_open) {
    std::ostringstream desc;
    desc << (lo_open ? "(" : "[") << lo << "," << hi << (hi_open ? ")" : "]");
    const std::string d = desc.str();
    return CLI::Validator(
        [=](std::string& s) -> std::string {
            char* end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (end == s.c_str() || *end != '\0' || std::isnan(v)) return "'" + s + "' is not a number";
            const bool ok_lo = lo_open ? v > lo : v >= lo;
            const bool ok_hi = hi_open ? v < hi : v <= hi;
            if (!ok_lo || !ok_hi) return "value " + s + " not in " + d;
            return {};
        },
        d);
}

const auto kUnitOpen = interval(0, 1, true, true);
const auto kUnitHalfOpen = interval(0, 1, true, false);
const auto kPositive = interval(0, kInfD, true, true);
const auto kNonNegative = interval(0, kInfD, false, true);
const auto kFinite = interval(-std::numeric_limits<double>::max(), std::numeric_limits<double>::max(), false, false);

void print_kv(const std::string& k, const std::string& v) { std::cout << k << ' ' << v << '\n'; }
void print_kv(const std::string& k, double v) { print_kv(k, fmt10(v)); }

void print_log(const std::string& prefix, const LogValue& v) {
    print_kv(prefix + "sign", std::to_string(v.sign_int()));
    print_kv(prefix + "log_abs", v.is_zero() ? std::string("-inf") : fmt10(v.log_abs));
}

void print_eval(const EvalResult& r) {
    print_kv("value", r.value);
    print_kv("abs_error_bound", r.abs_error_bound);
    print_kv("regime", to_string(r.regime));
    print_kv("terms_used", std::to_string(r.terms_used));
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io::ConfigError("cannot read config file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct ModelFlags {
    ModelParams p;
    void add(CLI::App* sub, bool with_alpha = true) {
        if (with_alpha) sub->add_option("--alpha", p.alpha, "time order in (0,1)")->required()->check(kUnitOpen);
        sub->add_option("--rho", p.rho, "space order, > 0")->required()->check(kPositive);
        sub->add_option("--dim", p.dim, "dimension, >= 1")->required()->check(CLI::Range(1, 1 << 20));
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fundamental solutions of the space-time fractional reaction-diffusion equation\n"
                 "and invasion-speed experiments."};
    app.require_subcommand(1);
    std::function<int()> action;

    // eval ml | eval wright
    auto* eval = app.add_subcommand("eval", "Evaluate a special function");
    eval->require_subcommand(1);
    double ml_alpha = 0.5, ml_beta = 1.0, ml_z = 0.0;
    auto* ml = eval->add_subcommand("ml", "Mittag-Leffler E_{alpha,beta}(z)");
    ml->add_option("--alpha", ml_alpha)->required()->check(kUnitHalfOpen);
    ml->add_option("--beta", ml_beta)->required()->check(kPositive);
    ml->add_option("--z", ml_z)->required()->check(kFinite);
    ml->callback([&] { action = [&] { print_eval(mittag_leffler(ml_alpha, ml_beta, ml_z)); return kOk; }; });

    double w_nu = 0.5, w_mu = 0.5, w_z = 0.0;
    auto* wr = eval->add_subcommand("wright", "Wright W_{-nu,mu}(z), z <= 0");
    wr->add_option("--nu", w_nu)->required()->check(kUnitOpen);
    wr->add_option("--mu", w_mu)->required()->check(kFinite);
    wr->add_option("--z", w_z)->required()->check(interval(-std::numeric_limits<double>::max(), 0, false, false));
    wr->callback([&] {
        action = [&] {
            print_eval(wright_neg(w_nu, w_mu, w_z));
            print_log("", log_wright_neg(w_nu, w_mu, w_z));
            return kOk;
        };
    });

    // kernel
    ModelFlags kflags;
    double k_t = 1.0, k_r = 0.0;
    auto* kern = app.add_subcommand("kernel", "Classical (alpha = 1) kernel u_{1,rho}(t, r) without the e^t factor");
    kflags.add(kern, false);
    kern->add_option("--t", k_t)->required()->check(kPositive);
    kern->add_option("--r", k_r, "radius")->required()->check(kNonNegative);
    kern->callback([&] {
        action = [&] {
            const auto& p = kflags.p;
            const auto kc = kernel_class(p.rho, p.dim);
            static constexpr const char* names[] = {"Gaussian", "Cauchy", "HigherOrder1D", "Envelope"};
            print_kv("class", names[static_cast<int>(kc)]);
            const auto v = classical_solution(p.rho, p.dim, k_t, k_r);
            if (const auto* lv = std::get_if<LogValue>(&v)) {
                print_log("", *lv);
            } else {
                const auto& env = std::get<BoundEnvelope>(v);
                print_log("lower_", env.lower);
                print_log("upper_", env.upper);
            }
            return kOk;
        };
    });

    // solution
    ModelFlags sflags;
    double s_t = 1.0, s_r = 0.0;
    double s_c1 = 1.0, s_c2 = 1.0;
    std::string s_method = "subordination";
    auto* sol = app.add_subcommand("solution", "u_{alpha,rho}(t, r) in log form");
    sflags.add(sol);
    sol->add_option("--t", s_t)->required()->check(kPositive);
    sol->add_option("--r", s_r, "radius")->required()->check(kNonNegative);
    sol->add_option("--method", s_method)->check(CLI::IsMember({"subordination", "fourier1d", "envelope"}));
    sol->add_option("--c1", s_c1, "envelope lower constant")->check(kPositive);
    sol->add_option("--c2", s_c2, "envelope upper constant, >= c1")->check(kPositive);
    sol->callback([&] {
        action = [&] {
            const auto& p = sflags.p;
            p.validate();
            if (s_method == "envelope") {
                const auto env = subordinate_envelope(p.alpha, p.rho, p.dim, s_t, s_r, {}, s_c1, s_c2);
                print_kv("method", s_method);
                print_log("lower_", env.lower);
                print_log("upper_", env.upper);
            } else if (s_method == "fourier1d") {
                const auto v = solution_at(p, s_t, s_r, Method::Fourier1D);
                print_kv("method", s_method);
                print_log("", v);
            } else {
                const auto res = subordinate_detailed(p.alpha, p.rho, p.dim, s_t, s_r);
                print_kv("method", s_method);
                print_log("", res.value);
                print_kv("rel_error", res.rel_error);
            }
            return kOk;
        };
    });

    // invade
    ExperimentConfig icfg;
    std::string config_path, profile_kind = "power", method_name = "auto";
    auto* inv = app.add_subcommand("invade", "Sample u along |x| = theta(t) and classify the trend");
    auto* cfg_opt = inv->add_option("--config", config_path, "JSON experiment config")->check(CLI::ExistingFile);
    std::vector<CLI::Option*> inline_opts;
    inline_opts.push_back(inv->add_option("--alpha", icfg.params.alpha)->check(kUnitOpen));
    inline_opts.push_back(inv->add_option("--rho", icfg.params.rho)->check(kPositive));
    inline_opts.push_back(inv->add_option("--dim", icfg.params.dim)->check(CLI::Range(1, 1 << 20)));
    inline_opts.push_back(
        inv->add_option("--profile", profile_kind)->check(CLI::IsMember({"power", "exponential"})));
    inline_opts.push_back(inv->add_option("--m", icfg.profile.m)->check(kPositive));
    inline_opts.push_back(inv->add_option("--beta", icfg.profile.beta)->check(kPositive));
    inline_opts.push_back(inv->add_option("--t-start", icfg.t_start)->check(kPositive));
    inline_opts.push_back(inv->add_option("--t-end", icfg.t_end)->check(kPositive));
    inline_opts.push_back(inv->add_option("--n-samples", icfg.n_samples)->check(CLI::Range(4, 100000)));
    inline_opts.push_back(inv->add_option("--method", method_name)
                              ->check(CLI::IsMember({"auto", "subordination", "fourier1d", "envelope_lower",
                                                     "envelope_upper"})));
    inline_opts.push_back(inv->add_option("--output", icfg.output_path, "output file (default stdout)"));
    inline_opts.push_back(inv->add_option("--format", icfg.format)->check(CLI::IsMember({"csv", "json"})));
    for (auto* o : inline_opts) cfg_opt->excludes(o);
    inv->callback([&] {
        action = [&] {
            ExperimentConfig cfg;
            if (!config_path.empty()) {
                cfg = io::config_from_string(read_file(config_path));
            } else {
                cfg = icfg;
                cfg.profile.kind = io::parse_profile(profile_kind);
                cfg.method = io::parse_method(method_name);
                try {
                    cfg.validate();
                } catch (const Error& e) {
                    throw io::ConfigError(e.what());
                }
            }
            const auto rep = run_experiment(cfg);
            const std::string body = cfg.format == "json" ? io::to_json(rep).dump(2) + "\n" : io::to_csv(rep.samples);
            std::ostream& summary = cfg.output_path.empty() ? std::cerr : std::cout;
            if (cfg.output_path.empty()) std::cout << body;
            else io::write_atomic(cfg.output_path, body);
            summary << "prediction " << to_string(rep.prediction) << '\n'
                    << "verdict " << to_string(rep.verdict) << '\n'
                    << "agrees " << (rep.agrees ? "true" : "false") << '\n';
            return kOk;
        };
    });

    // thresholds
    ModelFlags tflags;
    auto* thr = app.add_subcommand("thresholds", "Invasion-speed thresholds");
    tflags.add(thr);
    thr->callback([&] {
        action = [&] {
            const auto& p = tflags.p;
            const auto th = thresholds(p.alpha, p.rho, p.dim);
            print_kv("gamma_alpha", gamma_alpha(p.alpha));
            print_kv("power_lower", th.power_lower);
            print_kv("power_upper", th.power_upper);
            print_kv("exp_lower", th.exp_lower);
            print_kv("exp_upper", th.exp_upper);
            return kOk;
        };
    });

    // verify
    std::string suite_name;
    bool as_json = false;
    double rel_tol = 0.0;
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", suite_name, "suite name or 'all'")->required()->check(CLI::Validator(
        [](std::string& s) -> std::string { return parse_suite(s) ? std::string{} : "unknown suite '" + s + "'"; },
        "SUITE"));
    ver->add_flag("--json", as_json, "JSON report on stdout");
    auto* tol_opt = ver->add_option("--rel-tol", rel_tol, "override suite tolerance (exploratory only)")->check(kPositive);
    ver->callback([&] {
        action = [&] {
            TolOverrides ov;
            if (tol_opt->count()) ov.rel_tol = rel_tol;
            const Suite s = *parse_suite(suite_name);
            std::vector<SuiteReport> reps;
            if (s == Suite::All) reps = run_all_suites(ov);
            else reps.push_back(run_suite(s, ov));
            bool ok = true;
            for (const auto& r : reps) ok = ok && r.passed();
            if (as_json) {
                io::Json j;
                j["passed"] = ok;
                io::Json arr = io::Json::array();
                for (const auto& r : reps) arr.push_back(io::to_json(r));
                j["suites"] = arr;
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto& r : reps)
                    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite_name << ' ' << r.cases_passed << '/'
                              << r.cases_run << " worst_rel_error " << fmt10(r.worst_rel_error)
                              << (r.worst_case_inputs.empty() ? "" : " at " + r.worst_case_inputs) << '\n';
            }
            return ok ? kOk : kVerifyFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        return action();
    } catch (const io::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DomainError) {
            std::cerr << "usage error: " << e.what() << '\n';
            return kUsage;
        }
        std::cerr << "computation failed: " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return kFailure;
    }
}
