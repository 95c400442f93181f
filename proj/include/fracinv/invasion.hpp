#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "fourier1d.hpp"
#include "kernels.hpp"
#include "log_value.hpp"
#include "specfun.hpp"
#include "subordination.hpp"

namespace fracinv {

struct ModelParams {
    double alpha = 0.5;
    double rho = 1.0;
    int dim = 1;

    void validate() const {
        detail::require(alpha > 0 && alpha <= 1, "ModelParams: alpha must be in (0,1]");
        detail::require(rho > 0 && std::isfinite(rho), "ModelParams: rho must be positive");
        detail::require(dim >= 1, "ModelParams: dim must be >= 1");
    }
};

enum class ProfileKind { Power, Exponential };

/// Observer speed: theta(t) = m t^beta (Power) or e^{m t^beta} - 1 (Exponential).
struct SpeedProfile {
    ProfileKind kind = ProfileKind::Power;
    double m = 1.0;
    double beta = 1.0;

    void validate() const {
        detail::require(m > 0 && std::isfinite(m), "SpeedProfile: m must be positive");
        detail::require(beta > 0 && std::isfinite(beta), "SpeedProfile: beta must be positive");
    }
};

inline double theta(const SpeedProfile& p, double t) {
    p.validate();
    detail::require(t >= 0, "theta: t must be >= 0");
    const double tb = std::pow(t, p.beta);
    return p.kind == ProfileKind::Power ? p.m * tb : std::expm1(p.m * tb);
}

enum class Method { Subordination, Fourier1D, EnvelopeLower, EnvelopeUpper };

inline const char* to_string(Method m) noexcept {
    switch (m) {
        case Method::Subordination: return "subordination";
        case Method::Fourier1D: return "fourier1d";
        case Method::EnvelopeLower: return "envelope_lower";
        case Method::EnvelopeUpper: return "envelope_upper";
    }
    return "?";
}

struct TrajectorySample {
    double t = 0.0;
    double theta = 0.0;
    LogValue log_u;
    Method method = Method::Subordination;
    std::string error;  // empty on success

    bool ok() const noexcept { return error.empty(); }
};

/// geometric grid of n points on [t0, t1].
inline std::vector<double> geometric_grid(double t0, double t1, int n) {
    detail::require(t0 > 0 && t1 > t0 && n >= 2, "geometric_grid: need 0 < t0 < t1 and n >= 2");
    std::vector<double> g(n);
    const double q = std::log(t1 / t0) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = t0 * std::exp(q * i);
    g.back() = t1;
    return g;
}

inline std::vector<double> default_t_grid() { return geometric_grid(5.0, 60.0, 24); }

/// log u(t, r) by the chosen method. alpha = 1 is the classical e^t u_{1,rho}.
inline LogValue solution_at(const ModelParams& p, double t, double r, Method method, const QuadratureSpec& spec = {}) {
    p.validate();
    if (method == Method::Fourier1D && p.dim != 1) throw Error(ErrorKind::Unsupported, "fourier1d needs dim = 1");
    if (p.alpha == 1.0) {
        LogValue k;
        if (method == Method::EnvelopeLower || method == Method::EnvelopeUpper) {
            detail::require(p.rho > 0 && p.rho < 1, "envelope: rho must be in (0,1)");
            k = log_stable_envelope(p.rho, p.dim, t, r);
        } else {
            k = log_kernel(p.rho, p.dim, t, r);
        }
        if (!k.is_zero()) k.log_abs += t;
        return k;
    }
    switch (method) {
        case Method::Subordination: return subordinate(p.alpha, p.rho, p.dim, t, r, spec);
        case Method::Fourier1D: {
            const double e = std::exp(log_mittag_leffler(p.alpha, std::pow(t, p.alpha)).log_abs);
            const double tol = std::isfinite(e) ? 1e-9 * e : std::numeric_limits<double>::max();
            return log_solution_series(p.alpha, p.rho, t, r, tol).value;
        }
        case Method::EnvelopeLower: return subordinate_envelope(p.alpha, p.rho, p.dim, t, r, spec).lower;
        case Method::EnvelopeUpper: return subordinate_envelope(p.alpha, p.rho, p.dim, t, r, spec).upper;
    }
    throw Error(ErrorKind::DomainError, "unknown method");
}

/// Unsupported unless the method can handle (rho, dim).
inline void check_method(const ModelParams& p, Method method) {
    switch (method) {
        case Method::Fourier1D:
            if (p.dim != 1 || p.rho < 1.0) throw Error(ErrorKind::Unsupported, "fourier1d needs dim = 1 and rho >= 1");
            return;
        case Method::EnvelopeLower:
        case Method::EnvelopeUpper:
            if (!(p.rho < 1.0)) throw Error(ErrorKind::Unsupported, "envelopes need rho in (0,1)");
            return;
        case Method::Subordination:
            if (kernel_class(p.rho, p.dim) == KernelClass::Envelope)
                throw Error(ErrorKind::Unsupported, "no exact kernel for this rho; use the envelopes");
            return;
    }
}

/// Samples u along r = theta(t); point failures are recorded in the sample, not thrown.
inline std::vector<TrajectorySample> trajectory(const ModelParams& p, const SpeedProfile& prof,
                                                std::span<const double> t_grid, Method method,
                                                const QuadratureSpec& spec = {}) {
    p.validate();
    prof.validate();
    check_method(p, method);
    std::vector<double> ts(t_grid.begin(), t_grid.end());
    std::sort(ts.begin(), ts.end());
    std::vector<TrajectorySample> out;
    out.reserve(ts.size());
    for (double t : ts) {
        TrajectorySample s;
        s.t = t;
        s.method = method;
        try {
            s.theta = theta(prof, t);
            if (!std::isfinite(s.theta)) throw Error(ErrorKind::RangeError, "theta(t) overflows");
            s.log_u = solution_at(p, t, s.theta, method, spec);
        } catch (const Error& e) {
            s.error = e.what();
        }
        out.push_back(std::move(s));
    }
    return out;
}

enum class Verdict { Diverging, Vanishing, Inconclusive, InsufficientData };

inline const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Diverging: return "Diverging";
        case Verdict::Vanishing: return "Vanishing";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::InsufficientData: return "InsufficientData";
    }
    return "?";
}

struct Classification {
    Verdict verdict = Verdict::InsufficientData;
    double slope = std::numeric_limits<double>::quiet_NaN();
    int samples_used = 0;
};

/**
 * @brief Least-squares slope of log u against t over the trailing window.
 *
 * slope > slope_tol -> Diverging, slope < -slope_tol -> Vanishing. Needs at least 4
 * successful positive samples in the window.
 */
inline Classification classify(std::span<const TrajectorySample> samples, double window_fraction = 0.5,
                               double slope_tol = 0.02) {
    detail::require(window_fraction > 0 && window_fraction <= 1, "classify: window_fraction must be in (0,1]");
    detail::require(slope_tol >= 0, "classify: slope_tol must be >= 0");
    std::vector<const TrajectorySample*> sorted;
    for (const auto& s : samples) sorted.push_back(&s);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->t < b->t; });
    const auto n = sorted.size();
    const auto w = static_cast<std::size_t>(std::ceil(window_fraction * static_cast<double>(n)));
    std::vector<std::pair<double, double>> xy;
    for (std::size_t i = n - std::min(w, n); i < n; ++i) {
        const auto* s = sorted[i];
        if (s->ok() && s->log_u.sign == Sign::Pos && std::isfinite(s->log_u.log_abs))
            xy.emplace_back(s->t, s->log_u.log_abs);
    }
    Classification c;
    c.samples_used = static_cast<int>(xy.size());
    if (xy.size() < 4) return c;
    double mx = 0, my = 0;
    for (auto [x, y] : xy) {
        mx += x;
        my += y;
    }
    mx /= xy.size();
    my /= xy.size();
    double sxy = 0, sxx = 0;
    for (auto [x, y] : xy) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    c.slope = sxy / sxx;
    c.verdict = c.slope > slope_tol ? Verdict::Diverging
              : c.slope < -slope_tol ? Verdict::Vanishing
                                     : Verdict::Inconclusive;
    return c;
}

struct Thresholds {
    double power_lower = 0.0;  // 2 sqrt(1 - gamma_alpha)
    double power_upper = 0.0;  // 2 M sqrt(1 - gamma_alpha/M); +inf when M overflows
    double exp_lower = 0.0;    // (1 - gamma_alpha)/(d + 2 rho)
    double exp_upper = 0.0;    // 1/(d + 2 rho)
};

inline Thresholds thresholds(double alpha, double rho, int d) {
    ModelParams{alpha, rho, d}.validate();
    detail::require(alpha < 1, "thresholds: alpha must be in (0,1)");
    const double g = gamma_alpha(alpha);
    Thresholds th;
    th.power_lower = 2.0 * std::sqrt(1.0 - g);
    try {
        const double M = static_cast<double>(m_alpha(alpha));
        th.power_upper = 2.0 * M * std::sqrt(1.0 - g / M);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Overflow) throw;
        th.power_upper = std::numeric_limits<double>::infinity();
    }
    th.exp_lower = (1.0 - g) / (d + 2.0 * rho);
    th.exp_upper = 1.0 / (d + 2.0 * rho);
    return th;
}

enum class Prediction { Diverging, Vanishing, Gap, NoPrediction };

inline const char* to_string(Prediction p) noexcept {
    switch (p) {
        case Prediction::Diverging: return "Diverging";
        case Prediction::Vanishing: return "Vanishing";
        case Prediction::Gap: return "Gap";
        case Prediction::NoPrediction: return "NoPrediction";
    }
    return "?";
}

/// What the known invasion thresholds predict for this cell. Threshold values themselves are gaps.
inline Prediction predict(const ModelParams& p, const SpeedProfile& prof) {
    p.validate();
    prof.validate();
    if (p.alpha == 1.0) return Prediction::NoPrediction;
    const auto th = thresholds(p.alpha, p.rho, p.dim);
    auto dichotomy = [&](double lo, double hi) {
        if (prof.beta < 1) return Prediction::Diverging;
        if (prof.beta > 1) return Prediction::Vanishing;
        if (prof.m < lo) return Prediction::Diverging;
        if (prof.m > hi) return Prediction::Vanishing;
        return Prediction::Gap;
    };
    if (prof.kind == ProfileKind::Power) {
        if (p.rho == 1.0) return dichotomy(th.power_lower, th.power_upper);
        if (p.rho < 1.0) return Prediction::Diverging;
        if (prof.beta > 1) return Prediction::Vanishing;
        if (p.dim == 1 && prof.beta < 1.0 / (2.0 * p.rho)) return Prediction::Diverging;
        return Prediction::NoPrediction;
    }
    if (p.rho < 1.0) return dichotomy(th.exp_lower, th.exp_upper);
    return Prediction::NoPrediction;
}

struct ExperimentConfig {
    ModelParams params;
    SpeedProfile profile;
    double t_start = 5.0;
    double t_end = 60.0;
    int n_samples = 24;
    std::optional<Method> method;  // empty: chosen from (rho, dim)
    std::string output_path;       // empty: stdout
    std::string format = "csv";    // csv | json

    void validate() const {
        params.validate();
        profile.validate();
        detail::require(t_start > 0 && t_end > t_start, "ExperimentConfig: need 0 < t_start < t_end");
        detail::require(n_samples >= 4, "ExperimentConfig: n_samples must be >= 4");
        detail::require(format == "csv" || format == "json", "ExperimentConfig: format must be csv or json");
    }
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<TrajectorySample> samples;  // ascending t (lower before upper for envelopes)
    Verdict verdict = Verdict::InsufficientData;
    std::vector<Classification> classifications;  // one per method used
    Prediction prediction = Prediction::NoPrediction;
    bool agrees = false;  // verdict matches a Diverging/Vanishing prediction
};

/// Methods used for a cell: the exact route when one exists, otherwise both envelopes.
inline std::vector<Method> methods_for(const ModelParams& p, std::optional<Method> requested) {
    if (requested) return {*requested};
    if (p.rho == 1.0 || p.rho == 0.5) return {Method::Subordination};
    if (p.rho > 1.0) {
        if (p.dim != 1) throw Error(ErrorKind::Unsupported, "rho > 1 is only supported in one dimension");
        return {Method::Fourier1D};
    }
    return {Method::EnvelopeLower, Method::EnvelopeUpper};
}

/**
 * @brief Runs one (alpha, rho, d, profile) cell.
 *
 * With envelopes, a diverging lower envelope proves divergence and a vanishing upper
 * envelope proves vanishing; anything else is Inconclusive.
 */
inline ExperimentReport run_experiment(const ExperimentConfig& cfg, const QuadratureSpec& spec = {}) {
    cfg.validate();
    ExperimentReport rep;
    rep.config = cfg;
    const auto grid = geometric_grid(cfg.t_start, cfg.t_end, cfg.n_samples);
    const auto methods = methods_for(cfg.params, cfg.method);
    std::vector<std::vector<TrajectorySample>> runs;
    for (Method m : methods) {
        runs.push_back(trajectory(cfg.params, cfg.profile, grid, m, spec));
        rep.classifications.push_back(classify(runs.back()));
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (const auto& run : runs) rep.samples.push_back(run[i]);

    if (methods.size() == 1) {
        rep.verdict = rep.classifications[0].verdict;
        const Method m = methods[0];
        if (m == Method::EnvelopeLower && rep.verdict == Verdict::Vanishing) rep.verdict = Verdict::Inconclusive;
        if (m == Method::EnvelopeUpper && rep.verdict == Verdict::Diverging) rep.verdict = Verdict::Inconclusive;
    } else {
        const auto& lo = rep.classifications[0];
        const auto& up = rep.classifications[1];
        if (lo.verdict == Verdict::InsufficientData || up.verdict == Verdict::InsufficientData)
            rep.verdict = Verdict::InsufficientData;
        else if (lo.verdict == Verdict::Diverging)
            rep.verdict = Verdict::Diverging;
        else if (up.verdict == Verdict::Vanishing)
            rep.verdict = Verdict::Vanishing;
        else
            rep.verdict = Verdict::Inconclusive;
    }
    rep.prediction = predict(cfg.params, cfg.profile);
    rep.agrees = (rep.prediction == Prediction::Diverging && rep.verdict == Verdict::Diverging) ||
                 (rep.prediction == Prediction::Vanishing && rep.verdict == Verdict::Vanishing);
    return rep;
}

}  // namespace fracinv
