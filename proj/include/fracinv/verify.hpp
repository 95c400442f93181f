#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "fourier1d.hpp"
#include "kernels.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "subordination.hpp"

namespace fracinv {

enum class Suite {
    MLIdentities,
    WrightIdentities,
    EstimateLemmas,
    LeibnizProperties,
    Subordination,
    Representations,
    Asymptotics,
    All,
};

inline constexpr Suite kConcreteSuites[] = {Suite::MLIdentities,      Suite::WrightIdentities, Suite::EstimateLemmas,
                                            Suite::LeibnizProperties, Suite::Subordination,    Suite::Representations,
                                            Suite::Asymptotics};

inline const char* to_string(Suite s) noexcept {
    switch (s) {
        case Suite::MLIdentities: return "MLIdentities";
        case Suite::WrightIdentities: return "WrightIdentities";
        case Suite::EstimateLemmas: return "EstimateLemmas";
        case Suite::LeibnizProperties: return "LeibnizProperties";
        case Suite::Subordination: return "Subordination";
        case Suite::Representations: return "Representations";
        case Suite::Asymptotics: return "Asymptotics";
        case Suite::All: return "All";
    }
    return "?";
}

/// Accepts the enum spelling, kebab-case ("ml-identities") or a short alias ("ml"), case-insensitively.
inline std::optional<Suite> parse_suite(std::string_view name) {
    auto norm = [](std::string_view s) {
        std::string o;
        for (char c : s)
            if (c != '-' && c != '_') o += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return o;
    };
    const std::string n = norm(name);
    if (n == "all") return Suite::All;
    if (n == "ml") return Suite::MLIdentities;
    if (n == "wright") return Suite::WrightIdentities;
    if (n == "estimates") return Suite::EstimateLemmas;
    if (n == "leibniz") return Suite::LeibnizProperties;
    for (Suite s : kConcreteSuites)
        if (norm(to_string(s)) == n) return s;
    return std::nullopt;
}

struct SuiteReport {
    std::string suite_name;
    int cases_run = 0;
    int cases_passed = 0;
    double worst_rel_error = 0.0;
    std::string worst_case_inputs;

    bool passed() const noexcept { return cases_run > 0 && cases_run == cases_passed; }
};

/// Replaces each suite's relative tolerance when set.
struct TolOverrides {
    std::optional<double> rel_tol;
};

namespace detail {

inline std::string fmt_inputs(std::initializer_list<std::pair<const char*, double>> kv) {
    std::string s;
    char buf[64];
    for (const auto& [k, v] : kv) {
        if (!s.empty()) s += ", ";
        std::snprintf(buf, sizeof buf, "%s=%.10g", k, v);
        s += buf;
    }
    return s;
}

class Recorder {
public:
    Recorder(Suite s, double tol, const TolOverrides& ov) : tol_(ov.rel_tol.value_or(tol)) {
        rep_.suite_name = to_string(s);
    }

    double tol() const noexcept { return tol_; }

    /// Pass iff measure <= tol (measure is a relative error or a violation size).
    void record(double measure, const std::string& inputs, double tol) {
        ++rep_.cases_run;
        const bool ok = std::isfinite(measure) && measure <= tol;
        if (ok) ++rep_.cases_passed;
        const double m = std::isfinite(measure) ? measure : std::numeric_limits<double>::infinity();
        // The first failing case wins; among passes, the largest measure.
        if ((!ok && !failed_) || (ok == !failed_ && m > rep_.worst_rel_error) || rep_.worst_case_inputs.empty()) {
            if (!ok) failed_ = true;
            rep_.worst_rel_error = m;
            rep_.worst_case_inputs = inputs;
        }
    }
    void rel(double got, double want, const std::string& inputs) { rel(got, want, inputs, tol_); }
    void rel(double got, double want, const std::string& inputs, double tol) {
        record(std::abs(got - want) / std::max(std::abs(want), 1e-300), inputs, tol);
    }
    void holds(bool ok, double measure, const std::string& inputs) { record(ok ? 0.0 : std::max(measure, 1.0), inputs, tol_); }

    template <class F>
    void guarded(const std::string& inputs, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            record(std::numeric_limits<double>::infinity(), inputs + " [" + e.what() + "]", tol_);
        }
    }

    SuiteReport report() const { return rep_; }

private:
    double tol_;
    bool failed_ = false;
    SuiteReport rep_;
};

/// int_0^inf e^{z s} W_{-alpha,beta-alpha}(-s) ds by adaptive quadrature.
inline double laplace_wright(double alpha, double beta, double z) {
    const double mu = beta - alpha;
    auto lw = [&](double s) { return log_wright_neg(alpha, mu, -s); };
    auto f = [&](double s) {
        const LogValue w = lw(s);
        return w.is_zero() ? 0.0 : w.sign_int() * std::exp(z * s + w.log_abs);
    };
    // Upper limit: the integrand has fallen by e^{-50} from its running maximum.
    double smax = 1.0, best = -kInf;
    for (double s = 0.25;; s *= 1.25) {
        const LogValue w = lw(s);
        const double l = w.is_zero() ? -kInf : z * s + w.log_abs;
        best = std::max(best, l);
        if (l < best - 50.0 && s > 2.0) {
            smax = s;
            break;
        }
    }
    std::vector<double> br{0.0};
    for (double b = 0.5; b < smax; b *= 2.0) br.push_back(b);
    br.push_back(smax);
    QuadOptions o;
    o.rel_tol = 1e-11;
    const auto r = integrate(f, std::span<const double>(br), o);
    if (!r.converged) throw Error(ErrorKind::QuadratureFailure, "laplace_wright: no convergence");
    return r.value;
}

/// int_0^inf W_{-alpha,1-alpha}(-r) r^nu dr.
inline double wright_moment(double alpha, double nu) {
    auto f = [&](double r) {
        if (r <= 0) return nu == 0 ? reciprocal_gamma(1.0 - alpha) : 0.0;
        const LogValue w = log_wright_neg(alpha, 1.0 - alpha, -r);
        return w.is_zero() ? 0.0 : w.sign_int() * std::exp(w.log_abs + nu * std::log(r));
    };
    double best = -kInf, rmax = 1.0;
    for (double r = 0.5;; r *= 1.25) {
        const double l = std::log(std::abs(f(r)));
        best = std::max(best, l);
        if (l < best - 50.0 && r > 2.0) {
            rmax = r;
            break;
        }
    }
    std::vector<double> br{0.0};
    for (double b = 0.5; b < rmax; b *= 2.0) br.push_back(b);
    br.push_back(rmax);
    QuadOptions o;
    o.rel_tol = 1e-11;
    const auto r = integrate(f, std::span<const double>(br), o);
    if (!r.converged) throw Error(ErrorKind::QuadratureFailure, "wright_moment: no convergence");
    return r.value;
}

inline SuiteReport suite_ml(const TolOverrides& ov) {
    Recorder rec(Suite::MLIdentities, 1e-6, ov);
    const double sqpi = std::sqrt(std::numbers::pi);
    for (int i = 0; i <= 40; ++i) {
        const double z = -5.0 + 0.2 * i;
        const std::string in = fmt_inputs({{"alpha", 0.5}, {"z", z}});
        rec.guarded(in, [&] {
            const double e = std::exp(z * z) * std::erfc(-z);
            rec.rel(mittag_leffler(0.5, 1.0, z).value, e, in + ", beta=1");
            rec.rel(mittag_leffler(0.5, 0.5, z).value, 1.0 / sqpi + z * e, in + ", beta=0.5");
        });
    }
    for (double a : {0.3, 0.5, 0.7})
        for (double b : {1.0, a})
            for (double z : {-3.0, -1.0, 0.0, 0.5, 1.0}) {
                const std::string in = fmt_inputs({{"alpha", a}, {"beta", b}, {"z", z}}) + " laplace-wright";
                rec.guarded(in, [&] { rec.rel(laplace_wright(a, b, z), mittag_leffler(a, b, z).value, in); });
            }
    for (double a : {0.3, 0.5, 0.7, 0.9})
        for (double z : {-3.0, -1.0, 0.5, 2.0}) {
            const std::string in = fmt_inputs({{"alpha", a}, {"z", z}}) + " derivative";
            rec.guarded(in, [&] {
                const double h = 1e-3 * std::max(1.0, std::abs(z));
                auto E = [&](double w) { return mittag_leffler(a, 1.0, w).value; };
                // 5-point stencil, O(h^4).
                const double fd = (E(z - 2 * h) - 8 * E(z - h) + 8 * E(z + h) - E(z + 2 * h)) / (12 * h);
                rec.rel(fd, mittag_leffler_deriv(a, z).value, in);
            });
        }
    for (double a : {0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const std::string in = fmt_inputs({{"alpha", a}}) + " positive and nondecreasing on [-30,5]";
        rec.guarded(in, [&] {
            double prev = 0.0;
            bool ok = true;
            for (int i = 0; i <= 140; ++i) {
                const double z = -30.0 + 0.25 * i;
                const double v = mittag_leffler(a, 1.0, z).value;
                if (!(v > 0) || v < prev * (1 - 1e-12)) ok = false;
                prev = v;
            }
            rec.holds(ok, 1.0, in);
        });
    }
    return rec.report();
}

inline SuiteReport suite_wright(const TolOverrides& ov) {
    Recorder rec(Suite::WrightIdentities, 1e-7, ov);
    const double sqpi = std::sqrt(std::numbers::pi);
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        const std::string in = fmt_inputs({{"nu", 0.5}, {"x", x}});
        rec.guarded(in, [&] {
            rec.rel(log_wright_neg(0.5, 0.5, -x).log_abs, -x * x / 4 - std::log(sqpi), in + ", mu=0.5 (log)");
            rec.rel(wright_neg(0.5, 1.0, -x).value, std::erfc(x / 2), in + ", mu=1");
        });
    }
    for (double a : {0.3, 0.5, 0.8})
        for (double nu : {0.0, 0.5, 1.0, 2.0, 3.5}) {
            const std::string in = fmt_inputs({{"alpha", a}, {"nu", nu}}) + " moment";
            rec.guarded(in, [&] {
                const double want = std::exp(std::lgamma(nu + 1) - std::lgamma(nu * a + 1));
                rec.rel(wright_moment(a, nu), want, in);
            });
        }
    for (double a : {0.3, 0.5, 0.7})
        for (double z : {-0.5, -2.0, -5.0}) {
            const std::string in = fmt_inputs({{"alpha", a}, {"z", z}}) + " derivative";
            rec.guarded(in, [&] {
                const double h = 1e-3;
                auto W = [&](double w) { return wright_neg(a, 1.0, w).value; };
                const double fd = (W(z - 2 * h) - 8 * W(z - h) + 8 * W(z + h) - W(z + 2 * h)) / (12 * h);
                rec.rel(fd, wright_neg(a, 1.0 - a, z).value, in, std::max(rec.tol(), 1e-6));
            });
        }
    for (double a : {0.3, 0.5, 0.7, 0.8}) {
        const std::string in = fmt_inputs({{"alpha", a}}) + " decay bound fitted on [5,15], checked on (15,25]";
        rec.guarded(in, [&] {
            const double p = 1.0 / (1.0 - a);
            std::vector<double> xs, ys;
            bool positive = true;
            for (int i = 0; i <= 20; ++i) {
                const double r = 5.0 + 0.5 * i;
                const LogValue w = log_wright_neg(a, 1.0 - a, -r);
                positive = positive && w.sign == Sign::Pos;
                xs.push_back(std::pow(r, p));
                ys.push_back(w.log_abs);
            }
            double mx = 0, my = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
            mx /= xs.size();
            my /= xs.size();
            double sxy = 0, sxx = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                sxy += (xs[i] - mx) * (ys[i] - my);
                sxx += (xs[i] - mx) * (xs[i] - mx);
            }
            const double sigma = -0.95 * sxy / sxx;
            double logk = -kInf;
            for (std::size_t i = 0; i < xs.size(); ++i) logk = std::max(logk, ys[i] + sigma * xs[i]);
            bool ok = positive && sigma > 0;
            double worst = 0;
            for (int i = 1; i <= 20; ++i) {
                const double r = 15.0 + 0.5 * i;
                const LogValue w = log_wright_neg(a, 1.0 - a, -r);
                const double excess = w.log_abs - (logk - sigma * std::pow(r, p));
                ok = ok && w.sign == Sign::Pos && excess <= 0;
                worst = std::max(worst, excess);
            }
            rec.holds(ok, worst, in);
        });
    }
    for (double mu : {0.5, 1.0}) {
        const std::string in = fmt_inputs({{"nu", 0.5}, {"mu", mu}, {"z", -10}}) + " tail asymptotic within 5%";
        rec.guarded(in, [&] {
            const double ratio = std::exp(log_wright_tail(0.5, mu, -10).log_abs - log_wright_neg(0.5, mu, -10).log_abs);
            rec.rel(ratio, 1.0, in, 0.05);
        });
    }
    return rec.report();
}

inline SuiteReport suite_estimates(const TolOverrides& ov) {
    Recorder rec(Suite::EstimateLemmas, 0.0, ov);
    const std::pair<int, double> cells[] = {{2, 0.5}, {2, 0.75}, {3, 0.4}, {4, 0.3}};
    for (auto [n, a] : cells)
        for (int i = 0; i < 40; ++i) {
            const double r = std::pow(10.0, -2.0 + i * (std::log10(50.0) + 2.0) / 39.0);
            for (auto kind : {EstimateKind::Upper, EstimateKind::Lower}) {
                const std::string in = fmt_inputs({{"n", n}, {"alpha", a}, {"r", r}}) +
                                       (kind == EstimateKind::Upper ? " upper" : " lower");
                rec.guarded(in, [&] {
                    const auto m = ml_estimate_margin(kind, n, a, r);
                    // Non-strict inequality up to rounding of the evaluation.
                    const double viol = std::max(0.0, -m.slack - m.error_bound);
                    rec.record(viol, in, rec.tol());
                });
            }
        }
    return rec.report();
}

inline SuiteReport suite_leibniz(const TolOverrides& ov) {
    Recorder rec(Suite::LeibnizProperties, 0.0, ov);
    for (double a : {0.4, 0.6})
        for (double rho : {1.0, 1.5, 2.0})
            for (double t : {1.0, 5.0})
                for (double x : {2.0, 5.0, 10.0}) {
                    const std::string in = fmt_inputs({{"alpha", a}, {"rho", rho}, {"t", t}, {"x", x}});
                    rec.guarded(in + " alternating terms", [&] {
                        std::vector<double> ak;
                        for (int k = 0; k <= 20; ++k) ak.push_back(a_coefficient(k, a, rho, t, x));
                        bool ok = 2 * ak[0] > ak[1];
                        for (int k = 0; k <= 20; ++k) ok = ok && ak[k] > 0;
                        for (int k = 1; k < 20; ++k) ok = ok && ak[k + 1] < ak[k];
                        rec.holds(ok, 1.0, in + " alternating terms");
                    });
                    const int n = std::max(2, static_cast<int>(std::ceil(1.0 / a - 1e-12)));
                    rec.guarded(in + " a0 lower bound", [&] {
                        const double a0 = a_coefficient(0, a, rho, t, x);
                        const double lb = a0_lower_bound(n, a, rho, t, x);
                        rec.holds(a0 >= lb, (lb - a0) / std::abs(a0), in + " a0 lower bound");
                    });
                    if (x > 1.5 * std::numbers::pi)
                        rec.guarded(in + " a1 upper bound", [&] {
                            const double a1 = a_coefficient(1, a, rho, t, x);
                            const double ub = a1_upper_bound(n, a, rho, t, x);
                            rec.holds(a1 <= ub, (a1 - ub) / std::abs(a1), in + " a1 upper bound");
                        });
                }
    return rec.report();
}

inline SuiteReport suite_subordination(const TolOverrides& ov) {
    Recorder rec(Suite::Subordination, 1e-5, ov);
    for (double a : {0.3, 0.5, 0.7})
        for (double t : {0.5, 1.0, 2.0, 5.0}) {
            const std::string in = fmt_inputs({{"alpha", a}, {"t", t}}) + " mass";
            rec.guarded(in, [&] {
                const double got = total_mass(a, t).log_abs;
                const double want = log_mittag_leffler(a, std::pow(t, a)).log_abs;
                rec.record(std::abs(got - want), in, rec.tol());
            });
        }
    for (double a : {0.3, 0.6})
        for (double r : {0.0, 1.0, 4.0}) {
            const std::string in = fmt_inputs({{"alpha", a}, {"t", 2.0}, {"r", r}}) + " gaussian positive, radially decreasing";
            rec.guarded(in, [&] {
                const auto u0 = subordinate(a, 1.0, 1, 2.0, r);
                const auto u1 = subordinate(a, 1.0, 1, 2.0, r + 0.5);
                rec.holds(u0.sign == Sign::Pos && u1.sign == Sign::Pos && u1 < u0, 1.0, in);
            });
        }
    for (double r : {0.5, 2.0, 10.0}) {
        const std::string in = fmt_inputs({{"alpha", 0.5}, {"t", 3.0}, {"r", r}}) + " cauchy envelope sandwich";
        rec.guarded(in, [&] {
            const double c = 1.0 / std::numbers::pi;
            const auto exact = subordinate(0.5, 0.5, 1, 3.0, r);
            const auto env = subordinate_envelope(0.5, 0.5, 1, 3.0, r, {}, 0.9 * c, 1.1 * c);
            const auto tight = subordinate_envelope(0.5, 0.5, 1, 3.0, r, {}, c, c);
            rec.holds(env.lower < exact && exact < env.upper, 1.0, in);
            rec.record(std::abs(tight.lower.log_abs - exact.log_abs), in + " (c1 = c2 = 1/pi)", rec.tol());
        });
    }
    {
        const std::string in = fmt_inputs({{"alpha", 0.95}, {"t", 1.0}, {"r", 0.5}}) + " close to classical";
        rec.guarded(in, [&] {
            const double got = subordinate(0.95, 1.0, 1, 1.0, 0.5).to_double();
            const double want = std::get<LogValue>(classical_solution(1.0, 1, 1.0, 0.5)).to_double();
            rec.rel(got, want, in, 0.10);
        });
    }
    return rec.report();
}

inline SuiteReport suite_representations(const TolOverrides& ov) {
    Recorder rec(Suite::Representations, 1e-3, ov);
    for (double a : {0.4, 0.5, 0.8})
        for (double t : {1.0, 2.0, 5.0})
            for (double x : {0.0, 1.0, 3.0}) {
                const std::string in = fmt_inputs({{"alpha", a}, {"t", t}, {"x", x}}) + " subordination vs fourier";
                rec.guarded(in, [&] {
                    const double s = subordinate(a, 1.0, 1, t, x).to_double();
                    const double f = solution_series(a, 1.0, t, x, 1e-7).value;
                    rec.rel(s, f, in);
                });
            }
    for (double t : {0.5, 1.0, 2.0})
        for (double x : {0.0, 0.5, 1.0, 2.0}) {
            const std::string in = fmt_inputs({{"t", t}, {"x", x}}) + " higher-order kernel at rho=1";
            rec.guarded(in, [&] {
                rec.rel(higher_order_kernel_1d(1.0, t, x).value, gaussian_density(1, t, x), in, 1e-8);
            });
        }
    for (double t : {0.5, 2.0}) {
        const std::string in = fmt_inputs({{"t", t}}) + " unit mass of 1-d kernels";
        rec.guarded(in, [&] {
            auto g = [&](double w) {  // x = w / (1 - w)
                if (w >= 1) return 0.0;
                const double x = w / (1 - w);
                return 2.0 * gaussian_density(1, t, x) / ((1 - w) * (1 - w));
            };
            auto c = [&](double th) { return 2.0 * cauchy_density(1, t, t * std::tan(th)) * t / std::pow(std::cos(th), 2); };
            QuadOptions o;
            o.rel_tol = 1e-12;
            rec.rel(integrate(g, 0.0, 1.0, o).value, 1.0, in + " gaussian", 1e-8);
            rec.rel(integrate(c, 0.0, std::numbers::pi / 2, o).value, 1.0, in + " cauchy", 1e-8);
        });
    }
    return rec.report();
}

inline SuiteReport suite_asymptotics(const TolOverrides& ov) {
    // Limits are checked as trends: the larger scale is closer to the limit.
    Recorder rec(Suite::Asymptotics, 0.0, ov);
    auto trend = [&](const std::string& in, double small_scale_err, double large_scale_err) {
        rec.holds(large_scale_err < small_scale_err, large_scale_err, in);
    };
    for (auto [nu, mu] : {std::pair{0.3, 1.0}, {0.5, 1.0}, {0.7, 0.3}, {0.5, 0.5 + 1e-9}}) {
        const std::string in = fmt_inputs({{"nu", nu}, {"mu", mu}}) + " wright tail, |z| 10 -> 30";
        rec.guarded(in, [&] {
            auto err = [&](double z) {
                return std::abs(std::expm1(log_wright_tail(nu, mu, z).log_abs - log_wright_neg(nu, mu, z).log_abs));
            };
            trend(in, err(-10), err(-30));
        });
    }
    for (double s : {-0.5, 0.5, 2.0}) {
        const std::string in = fmt_inputs({{"s", s}}) + " incomplete gamma, x 25 -> 50";
        rec.guarded(in, [&] {
            auto err = [&](double x) {
                return std::abs(gamma_upper_incomplete(s, x) / std::exp((s - 1) * std::log(x) - x) - 1.0);
            };
            trend(in, err(25), err(50));
        });
    }
    for (double a : {0.5, 0.7, 0.9}) {
        const std::string in = fmt_inputs({{"alpha", a}}) + " E_alpha(z) vs exp(z^{1/alpha})/alpha, z 2 -> 5";
        rec.guarded(in, [&] {
            auto err = [&](double z) {
                return std::abs(std::expm1(log_mittag_leffler(a, z).log_abs - (std::pow(z, 1 / a) - std::log(a))));
            };
            trend(in, err(2), err(5));
        });
        const std::string in2 = fmt_inputs({{"alpha", a}}) + " E_alpha(-x) x Gamma(1-alpha) -> 1, x 10 -> 50";
        rec.guarded(in2, [&] {
            auto err = [&](double x) { return std::abs(mittag_leffler(a, 1, -x).value * x * std::tgamma(1 - a) - 1); };
            trend(in2, err(10), err(50));
        });
    }
    for (auto [n, a] : {std::pair{2, 0.5}, {2, 0.75}, {3, 0.4}}) {
        const std::string in = fmt_inputs({{"n", n}, {"alpha", a}}) + " c0/E and t^{a(n-1)} c1/E vanish, t 5 -> 20";
        rec.guarded(in, [&] {
            const double x = 6.0, rho = 1.0;
            auto r0 = [&](double t) {
                return std::abs(c0_term(n, a, rho, t, x, dottie())) / mittag_leffler(a, 1, std::pow(t, a)).value;
            };
            auto r1 = [&](double t) {
                return std::abs(std::pow(t, a * (n - 1)) * c1_term(n, a, rho, t, x)) /
                       mittag_leffler(a, 1, std::pow(t, a)).value;
            };
            trend(in + " (c0)", r0(5), r0(20));
            trend(in + " (c1)", r1(5), r1(20));
        });
    }
    return rec.report();
}

}  // namespace detail

/// Runs one suite. Deterministic: same inputs, same report.
inline SuiteReport run_suite(Suite s, const TolOverrides& ov = {}) {
    switch (s) {
        case Suite::MLIdentities: return detail::suite_ml(ov);
        case Suite::WrightIdentities: return detail::suite_wright(ov);
        case Suite::EstimateLemmas: return detail::suite_estimates(ov);
        case Suite::LeibnizProperties: return detail::suite_leibniz(ov);
        case Suite::Subordination: return detail::suite_subordination(ov);
        case Suite::Representations: return detail::suite_representations(ov);
        case Suite::Asymptotics: return detail::suite_asymptotics(ov);
        case Suite::All: break;
    }
    SuiteReport all;
    all.suite_name = "All";
    bool failed = false;
    for (Suite c : kConcreteSuites) {
        const auto r = run_suite(c, ov);
        all.cases_run += r.cases_run;
        all.cases_passed += r.cases_passed;
        const bool rf = !r.passed();
        if ((rf && !failed) || (rf == failed && r.worst_rel_error > all.worst_rel_error)) {
            all.worst_rel_error = r.worst_rel_error;
            all.worst_case_inputs = r.suite_name + ": " + r.worst_case_inputs;
        }
        failed = failed || rf;
    }
    return all;
}

/// Every concrete suite, in declaration order.
inline std::vector<SuiteReport> run_all_suites(const TolOverrides& ov = {}) {
    std::vector<SuiteReport> v;
    for (Suite c : kConcreteSuites) v.push_back(run_suite(c, ov));
    return v;
}

}  // namespace fracinv
