#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <span>
#include <vector>

#include "error.hpp"

namespace fracinv {

/// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) c_ += (sum_ - t) + x;
        else c_ += (x - t) + sum_;
        sum_ = t;
        abs_ += std::abs(x);
    }
    double value() const noexcept { return sum_ + c_; }
    /// Sum of |terms|; rounding error of value() is a small multiple of eps times this.
    double abs_total() const noexcept { return abs_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
    double abs_ = 0.0;
};

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
    int intervals = 0;
    bool converged = false;
};

struct QuadOptions {
    double abs_tol = 0.0;
    double rel_tol = 1e-10;
    int max_intervals = 2000;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> gk15_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> gk15_wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gk15_wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const noexcept { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double rk = fc * gk15_wk[7];
    double rg = fc * gk15_wg[3];
    double resabs = std::abs(rk);
    std::array<double, 7> f1{}, f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = h * gk15_x[j];
        f1[j] = f(c - dx);
        f2[j] = f(c + dx);
        const double s = f1[j] + f2[j];
        rk += gk15_wk[j] * s;
        resabs += gk15_wk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) rg += gk15_wg[j / 2] * s;
    }
    const double mean = 0.5 * rk;
    double resasc = gk15_wk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) resasc += gk15_wk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    const double hh = std::abs(h);
    double err = std::abs((rk - rg) * h);
    resasc *= hh;
    resabs *= hh;
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(err, 50 * eps * resabs);
    return {a, b, rk * h, err};
}

}  // namespace detail

/**
 * @brief Globally adaptive Gauss-Kronrod 15 over consecutive breakpoints.
 *
 * Bisects the worst segment until the summed error estimate meets
 * max(abs_tol, rel_tol * |I|). The integrand must be finite on the open segments.
 */
template <class F>
QuadResult integrate(F&& f, std::span<const double> breaks, const QuadOptions& opt = {}) {
    detail::require(breaks.size() >= 2, "integrate: need at least two breakpoints");
    std::priority_queue<detail::Segment> heap;
    QuadResult r;
    double total = 0.0, err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] == breaks[i]) continue;
        auto s = detail::gk15(f, breaks[i], breaks[i + 1]);
        r.evaluations += 15;
        total += s.value;
        err += s.error;
        heap.push(s);
    }
    while (!heap.empty()) {
        const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (err <= target) {
            r.converged = true;
            break;
        }
        if (static_cast<int>(heap.size()) >= opt.max_intervals) break;
        const auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) break;
        heap.pop();
        auto left = detail::gk15(f, worst.a, mid);
        auto right = detail::gk15(f, mid, worst.b);
        r.evaluations += 30;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum from the segments to shed the drift of incremental updates.
    CompensatedSum sum;
    double e = 0.0;
    r.intervals = static_cast<int>(heap.size());
    while (!heap.empty()) {
        sum.add(heap.top().value);
        e += heap.top().error;
        heap.pop();
    }
    r.value = sum.value();
    r.abs_error = e;
    if (!r.converged) r.converged = e <= std::max(opt.abs_tol, opt.rel_tol * std::abs(r.value));
    return r;
}

template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
    const std::array<double, 2> br{a, b};
    return integrate(f, std::span<const double>(br), opt);
}

/// Nodes and weights of n-point Gauss-Legendre on [-1, 1].
template <int N>
struct GaussLegendre {
    std::array<double, N> x{};
    std::array<double, N> w{};

    GaussLegendre() {
        for (int i = 0; i < (N + 1) / 2; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = z;
                for (int k = 2; k <= N; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (z * p1 - p0) / (z * z - 1.0);
                const double dz = p1 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= N; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = N * (z * p1 - p0) / (z * z - 1.0);
            x[i] = -z;
            x[N - 1 - i] = z;
            w[i] = w[N - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
    }

    static const GaussLegendre& instance() {
        static const GaussLegendre rule;
        return rule;
    }
};

}  // namespace fracinv
