#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "error.hpp"
#include "kernels.hpp"
#include "log_value.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace fracinv {

struct QuadratureSpec {
    double rel_tol = 1e-6;
    int max_panels = 4096;
    int peak_search_iters = 200;
    double tail_cut_log = -40.0;

    void validate() const {
        detail::require(rel_tol > 0 && rel_tol < 1, "QuadratureSpec: rel_tol must be in (0,1)");
        detail::require(max_panels >= 1, "QuadratureSpec: max_panels must be positive");
        detail::require(peak_search_iters >= 1, "QuadratureSpec: peak_search_iters must be positive");
        detail::require(tail_cut_log < 0, "QuadratureSpec: tail_cut_log must be negative");
    }
};

struct SubordinationResult {
    LogValue value;
    double rel_error = 0.0;   // estimated
    int panels = 0;
    double peak_s = 0.0;      // location of the integrand maximum
};

namespace detail {

/**
 * t^{-alpha} int_0^inf f(s) W_{-alpha,1-alpha}(-t^{-alpha} s) ds with log_f(s) giving f as a LogValue.
 *
 * Works in v = sqrt(s), which keeps s^{-1/2} endpoint behaviour bounded. The maximum of
 * the log-integrand is located by scanning from s = t outward and refined by golden
 * section; the range is cut where the log-integrand drops tail_cut_log below the peak;
 * the rest is summed with adaptive 32-point Gauss-Legendre panels relative to the peak.
 */
template <class LogF>
SubordinationResult subordinate_integral(double alpha, double t, LogF&& log_f, const QuadratureSpec& spec) {
    require(alpha > 0 && alpha < 1, "subordinate: alpha must be in (0,1)");
    require(t > 0 && std::isfinite(t), "subordinate: t must be positive");
    spec.validate();
    const double lt = alpha * std::log(t);
    const double tscale = std::exp(-lt);
    auto logh = [&](double v) -> LogValue {
        if (v <= 0) return LogValue::zero();
        const double s = v * v;
        const LogValue f = log_f(s);
        if (f.is_zero()) return f;
        LogValue w = log_wright_neg(alpha, 1.0 - alpha, -s * tscale);
        LogValue out = f * w;
        if (!out.is_zero()) out.log_abs += std::log(2.0 * v) - lt;
        return out;
    };
    auto lval = [&](double v) {
        const LogValue h = logh(v);
        return h.is_zero() ? -kInf : h.log_abs;
    };

    // Scan in u = log v with step log(2)/2 (a factor 2 in s), starting at s = t.
    const double du = 0.5 * std::log(2.0);
    const double u0 = 0.5 * std::log(t);
    std::vector<std::pair<double, double>> pts;  // (u, log|h|)
    pts.emplace_back(u0, lval(std::exp(u0)));
    double best = pts.back().second;
    const double drop = -spec.tail_cut_log + 5.0;
    int budget = spec.peak_search_iters;
    // upward
    for (double u = u0 + du; budget-- > 0; u += du) {
        const double l = lval(std::exp(u));
        pts.emplace_back(u, l);
        best = std::max(best, l);
        if (std::isfinite(best) && l < best - drop && u > u0 + 2 * du) break;
    }
    // downward
    bool reached_zero = false;
    const double u_floor = u0 + std::log(1e-10);
    budget = spec.peak_search_iters;
    for (double u = u0 - du; budget-- > 0; u -= du) {
        if (u < u_floor) {
            reached_zero = true;
            break;
        }
        const double l = lval(std::exp(u));
        pts.emplace_back(u, l);
        best = std::max(best, l);
        if (std::isfinite(best) && l < best - drop && u < u0 - 2 * du) break;
    }
    std::sort(pts.begin(), pts.end());
    if (!std::isfinite(best)) {
        SubordinationResult zero;
        return zero;
    }
    std::size_t im = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].second > pts[im].second) im = i;

    // Golden section on the bracket around the best scan point.
    double a = pts[im > 0 ? im - 1 : im].first, b = pts[std::min(im + 1, pts.size() - 1)].first;
    double peak_u = pts[im].first, peak = pts[im].second;
    if (b > a) {
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        double c = b - g * (b - a), d = a + g * (b - a);
        double fc = lval(std::exp(c)), fd = lval(std::exp(d));
        for (int it = 0; it < spec.peak_search_iters && (b - a) > 1e-9; ++it) {
            if (fc > fd) {
                b = d; d = c; fd = fc;
                c = b - g * (b - a); fc = lval(std::exp(c));
            } else {
                a = c; c = d; fc = fd;
                d = a + g * (b - a); fd = lval(std::exp(d));
            }
        }
        const double um = 0.5 * (a + b);
        const double fm = lval(std::exp(um));
        if (fm > peak) {
            peak = fm;
            peak_u = um;
        }
    }
    const double cut = peak + spec.tail_cut_log;

    // Truncation points by bisection between scan points straddling the cut.
    auto crossing = [&](double inside, double outside) {
        for (int it = 0; it < 60; ++it) {
            const double m = 0.5 * (inside + outside);
            (lval(std::exp(m)) > cut ? inside : outside) = m;
        }
        return outside;
    };
    double u_right = pts.back().first;
    for (std::size_t i = im; i + 1 < pts.size(); ++i) {
        if (pts[i + 1].second < cut) {
            u_right = crossing(pts[i].first, pts[i + 1].first);
            break;
        }
    }
    double u_left = pts.front().first;
    bool left_zero = reached_zero;
    for (std::size_t i = im; i > 0; --i) {
        if (pts[i - 1].second < cut) {
            u_left = crossing(pts[i].first, pts[i - 1].first);
            left_zero = false;
            break;
        }
    }
    if (left_zero && pts.front().second < cut) left_zero = false;

    // Panels: scan points inside the range, in v.
    std::vector<double> br;
    br.push_back(left_zero ? 0.0 : std::exp(u_left));
    for (const auto& p : pts)
        if (p.first > u_left && p.first < u_right) br.push_back(std::exp(p.first));
    br.push_back(std::exp(u_right));
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());

    const auto& gl = GaussLegendre<32>::instance();
    auto h = [&](double v) {
        const LogValue x = logh(v);
        if (x.is_zero()) return 0.0;
        return x.sign_int() * std::exp(x.log_abs - peak);
    };
    auto rule = [&](double lo, double hi) {
        const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
        CompensatedSum s;
        for (int i = 0; i < 32; ++i) s.add(gl.w[i] * h(c + r * gl.x[i]));
        return s.value() * r;
    };
    struct Panel {
        double lo, hi, whole, split, err;
        bool operator<(const Panel& o) const noexcept { return err < o.err; }
    };
    auto make = [&](double lo, double hi, double whole) {
        const double mid = 0.5 * (lo + hi);
        const double split = rule(lo, mid) + rule(mid, hi);
        return Panel{lo, hi, whole, split, std::abs(split - whole)};
    };
    std::priority_queue<Panel> heap;
    double total = 0.0, err = 0.0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
        auto p = make(br[i], br[i + 1], rule(br[i], br[i + 1]));
        total += p.split;
        err += p.err;
        heap.push(p);
    }
    while (err > 0.25 * spec.rel_tol * std::abs(total)) {
        if (static_cast<int>(heap.size()) >= spec.max_panels)
            throw Error(ErrorKind::QuadratureFailure, "subordinate: panel budget exhausted");
        const Panel w = heap.top();
        heap.pop();
        const double mid = 0.5 * (w.lo + w.hi);
        auto l = make(w.lo, mid, rule(w.lo, mid));
        auto r = make(mid, w.hi, rule(mid, w.hi));
        total += l.split + r.split - w.split;
        err += l.err + r.err - w.err;
        heap.push(l);
        heap.push(r);
    }
    SubordinationResult out;
    out.panels = static_cast<int>(heap.size());
    CompensatedSum sum;
    double e = 0.0;
    while (!heap.empty()) {
        sum.add(heap.top().split);
        e += heap.top().err;
        heap.pop();
    }
    const double I = sum.value();
    out.value = LogValue::from_double(I);
    if (!out.value.is_zero()) out.value.log_abs += peak;
    out.rel_error = I != 0 ? e / std::abs(I) : 0.0;
    const double vp = std::exp(peak_u);
    out.peak_s = vp * vp;
    return out;
}

inline void check_solution_args(double alpha, int d, double t, double r) {
    require(alpha > 0 && alpha < 1, "subordinate: alpha must be in (0,1)");
    check_kernel_args(d, t, r);
}

}  // namespace detail

/**
 * @brief u_{alpha,rho}(t, r) = t^{-alpha} int_0^inf u_{1,rho}(s, r) W_{-alpha,1-alpha}(-t^{-alpha} s) ds.
 *
 * Needs an exact kernel (rho = 1/2, rho = 1, or rho > 1 with d = 1). At r = 0 the
 * solution is infinite when d >= 2 rho.
 */
inline SubordinationResult subordinate_detailed(double alpha, double rho, int d, double t, double r,
                                                const QuadratureSpec& spec = {}) {
    detail::check_solution_args(alpha, d, t, r);
    const auto kc = kernel_class(rho, d);
    if (kc == KernelClass::Envelope)
        throw Error(ErrorKind::Unsupported, "subordinate: no exact kernel for this rho; use subordinate_envelope");
    if (r == 0.0 && d >= 2.0 * rho)
        throw Error(ErrorKind::DomainError, "subordinate: solution is singular at the origin for d >= 2 rho");
    auto log_f = [&](double s) {
        LogValue k = log_kernel(rho, d, s, r);
        if (!k.is_zero()) k.log_abs += s;
        return k;
    };
    return detail::subordinate_integral(alpha, t, log_f, spec);
}

inline LogValue subordinate(double alpha, double rho, int d, double t, double r, const QuadratureSpec& spec = {}) {
    return subordinate_detailed(alpha, rho, d, t, r, spec).value;
}

/// log of t^{-alpha} int_0^inf e^s W_{-alpha,1-alpha}(-t^{-alpha} s) ds, which equals log E_alpha(t^alpha).
inline LogValue total_mass(double alpha, double t, const QuadratureSpec& spec = {}) {
    return detail::subordinate_integral(alpha, t, [](double s) { return LogValue::from_log(s); }, spec).value;
}

/// Lower and upper subordinated envelopes for rho in (0,1) with constants c1 <= c2.
inline BoundEnvelope subordinate_envelope(double alpha, double rho, int d, double t, double r,
                                          const QuadratureSpec& spec = {}, double c1 = 1.0, double c2 = 1.0) {
    detail::check_solution_args(alpha, d, t, r);
    detail::require(rho > 0 && rho < 1, "subordinate_envelope: rho must be in (0,1)");
    detail::require(c1 > 0 && c1 <= c2, "subordinate_envelope: need 0 < c1 <= c2");
    if (r == 0.0 && d >= 2.0 * rho)
        throw Error(ErrorKind::DomainError, "subordinate_envelope: singular at the origin for d >= 2 rho");
    auto log_f = [&](double s) {
        LogValue k = log_stable_envelope(rho, d, s, r, 1.0);
        k.log_abs += s;
        return k;
    };
    const LogValue base = detail::subordinate_integral(alpha, t, log_f, spec).value;
    return {base * LogValue::from_log(std::log(c1)), base * LogValue::from_log(std::log(c2))};
}

}  // namespace fracinv
