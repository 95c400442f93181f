#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "error.hpp"
#include "log_value.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace fracinv {

/**
 * One-dimensional Fourier representation
 *   u(t, x) = (1/pi) int_0^inf E_alpha(t^alpha (1 - xi^{2 rho})) cos(x xi) dxi
 *           = (1/pi) sum_k (-1)^k a_k,
 * a_0 over [0, pi/(2x)], a_k over [(2k-1)pi/(2x), (2k+1)pi/(2x)], each a_k >= 0.
 */
namespace detail {

inline void check_fourier_args(double alpha, double rho, double t) {
    require(alpha > 0 && alpha <= 1, "fourier1d: alpha must be in (0,1]");
    require(rho > 0 && std::isfinite(rho), "fourier1d: rho must be positive");
    require(t > 0 && std::isfinite(t), "fourier1d: t must be positive");
}

/// E_alpha(t^alpha (1 - xi^{2 rho})) / E_alpha(t^alpha), so values stay in (0, 1].
class ScaledProfile {
public:
    ScaledProfile(double alpha, double rho, double t)
        : alpha_(alpha), two_rho_(2.0 * rho), ta_(std::pow(t, alpha)),
          log_scale_(log_mittag_leffler(alpha, ta_).log_abs) {}

    double operator()(double xi) const {
        const double z = ta_ * (1.0 - std::pow(xi, two_rho_));
        const LogValue e = log_mittag_leffler(alpha_, z);
        return std::exp(e.log_abs - log_scale_);
    }

    double log_scale() const noexcept { return log_scale_; }

private:
    double alpha_, two_rho_, ta_, log_scale_;
};

inline QuadOptions fourier_quad_options() {
    QuadOptions o;
    o.rel_tol = 1e-11;
    o.abs_tol = 0.0;
    o.max_intervals = 2000;
    return o;
}

/// a_k / E_alpha(t^alpha).
inline double scaled_a(const ScaledProfile& f, int k, double x) {
    const double h = std::numbers::pi / (2.0 * x);
    const double lo = k == 0 ? 0.0 : (2.0 * k - 1.0) * h;
    const double hi = (2.0 * k + 1.0) * h;
    auto g = [&](double xi) { return f(xi) * std::cos(x * xi); };
    std::vector<double> br{lo};
    if (lo < 1.0 && hi > 1.0) br.push_back(1.0);
    br.push_back(hi);
    const auto r = integrate(g, std::span<const double>(br), fourier_quad_options());
    if (!r.converged) throw Error(ErrorKind::QuadratureFailure, "a_coefficient: quadrature did not converge");
    return (k % 2 == 0) ? r.value : -r.value;
}

}  // namespace detail

/// a_k(t, x) as defined above; x > 0.
inline double a_coefficient(int k, double alpha, double rho, double t, double x) {
    detail::check_fourier_args(alpha, rho, t);
    detail::require(k >= 0, "a_coefficient: k must be >= 0");
    detail::require(x > 0 && std::isfinite(x), "a_coefficient: x must be positive");
    const detail::ScaledProfile f(alpha, rho, t);
    const double v = detail::scaled_a(f, k, x);
    const double l = std::log(std::abs(v)) + f.log_scale();
    if (l > detail::kLogMax) throw Error(ErrorKind::RangeError, "a_coefficient: value exceeds double range");
    return std::copysign(std::exp(l), v);
}

struct SeriesValue {
    LogValue value;
    double abs_error_scaled = 0.0;  // error bound divided by E_alpha(t^alpha)
    double log_scale = 0.0;         // log E_alpha(t^alpha)
    int terms = 0;
    Regime regime = Regime::TaylorSeries;
};

/**
 * @brief Alternating-series evaluation of u(t, x) in log form.
 *
 * Stops once a_{N+1} < tol * pi, with tol measured in units of u. The Leibniz bound
 * a_{N+1}/pi is reported. x = 0 is evaluated as the single non-oscillatory integral
 * (finite only for rho > 1/2). Throws NonConvergence if the term budget runs out or
 * more than 12 digits cancel.
 */
inline SeriesValue log_solution_series(double alpha, double rho, double t, double x, double tol,
                                       int max_terms = 100000) {
    detail::check_fourier_args(alpha, rho, t);
    detail::require(x >= 0 && std::isfinite(x), "solution_series: x must be >= 0");
    detail::require(tol > 0, "solution_series: tol must be positive");
    const detail::ScaledProfile f(alpha, rho, t);
    SeriesValue out;
    out.log_scale = f.log_scale();
    const double pi = std::numbers::pi;

    if (x == 0.0) {
        detail::require(rho > 0.5, "solution_series: u(t, 0) is infinite for rho <= 1/2");
        auto tail = [&](double w) { return w <= 0 ? 0.0 : f(1.0 / w) / (w * w); };
        const auto o = detail::fourier_quad_options();
        const auto r1 = integrate(f, 0.0, 1.0, o);
        const auto r2 = integrate(tail, 0.0, 1.0, o);
        if (!r1.converged || !r2.converged)
            throw Error(ErrorKind::QuadratureFailure, "solution_series: x = 0 integral did not converge");
        out.value = LogValue::from_double((r1.value + r2.value) / pi);
        out.value.log_abs += out.log_scale;
        out.abs_error_scaled = (r1.abs_error + r2.abs_error) / pi;
        out.terms = 1;
        out.regime = Regime::Quadrature;
        return out;
    }

    const double stop = std::log(tol * pi) - out.log_scale;  // compare log of scaled a_k
    CompensatedSum sum;
    double max_partial = 0.0;
    double next = detail::scaled_a(f, 0, x);
    int k = 0;
    for (;; ++k) {
        if (k >= max_terms) throw Error(ErrorKind::NonConvergence, "solution_series: term budget exhausted");
        const double ak = next;
        sum.add((k % 2 == 0) ? ak : -ak);
        max_partial = std::max(max_partial, std::abs(sum.value()));
        next = detail::scaled_a(f, k + 1, x);
        if (next <= 0 || std::log(next) < stop) break;
    }
    const double s = sum.value();
    if (!(std::abs(s) * 1e12 > max_partial))
        throw Error(ErrorKind::NonConvergence, "solution_series: more than 12 digits cancelled");
    out.value = LogValue::from_double(s / pi);
    if (!out.value.is_zero()) out.value.log_abs += out.log_scale;
    out.abs_error_scaled = std::max(next, 0.0) / pi;
    out.terms = k + 1;
    return out;
}

/// u(t, x) as a double with the Leibniz error bound a_{N+1}/pi.
inline EvalResult solution_series(double alpha, double rho, double t, double x, double tol,
                                  int max_terms = 100000) {
    const auto sv = log_solution_series(alpha, rho, t, x, tol, max_terms);
    if (sv.value.log_abs > detail::kLogMax || sv.log_scale > detail::kLogMax)
        throw Error(ErrorKind::NonConvergence, "solution_series: a_0 overflows double; use log_solution_series");
    return {sv.value.to_double(), sv.abs_error_scaled * std::exp(sv.log_scale), sv.terms, sv.regime};
}

namespace detail {

inline void check_bound_args(int n, double alpha, double rho, double t) {
    require(n >= 2, "bound: n must be >= 2");
    require(alpha >= 1.0 / n && alpha < 1, "bound: alpha must be in [1/n, 1)");
    require(rho >= 1, "bound: rho must be >= 1");
    require(t > 0, "bound: t must be positive");
}

}  // namespace detail

/**
 * @brief c_0(t, x): polynomial correction in the a_0 lower bound.
 *
 * With r0 = 1 - (l/x)^{2rho}, K = floor(n-1+1/(2alpha)) and b_k = int_{r0}^1 r^{k+1-n} dr,
 *   c0 = -(t^a/a) sum_{k=0}^{K} lambda_k t^{ak} b_k + (t^a/a) sum_{k=n-1}^{K} beta_k t^{ak} b_k.
 */
inline double c0_term(int n, double alpha, double rho, double t, double x, double ell) {
    detail::check_bound_args(n, alpha, rho, t);
    const double r0 = 1.0 - std::pow(ell / x, 2.0 * rho);
    detail::require(r0 > 0, "c0_term: need x > l");
    const int K = static_cast<int>(std::floor(n - 1 + 1.0 / (2.0 * alpha)));
    const double ta = std::pow(t, alpha);
    auto b = [&](int k) {
        const int e = k + 2 - n;
        return e == 0 ? -std::log(r0) : (1.0 - std::pow(r0, e)) / e;
    };
    CompensatedSum s;
    for (int k = 0; k <= K; ++k) s.add(-reciprocal_gamma(alpha + alpha * k) * std::pow(ta, k) * b(k));
    for (int k = n - 1; k <= K; ++k) s.add(reciprocal_gamma(1.0 + alpha * k - alpha * (n - 1)) * std::pow(ta, k) * b(k));
    return ta / alpha * s.value();
}

/// c_1(t, x) = (t^a/a) sum_{k=0}^{floor((3n-2)/2)} gamma_k t^{ak} (r2^{k+1} - r1^{k+1})/(k+1).
inline double c1_term(int n, double alpha, double rho, double t, double x) {
    detail::check_bound_args(n, alpha, rho, t);
    const double pi = std::numbers::pi;
    const double r2 = 1.0 - std::pow(pi / (2.0 * x), 2.0 * rho);
    const double r1 = 1.0 - std::pow(3.0 * pi / (2.0 * x), 2.0 * rho);
    detail::require(r1 > 0, "c1_term: need x > 3 pi / 2");
    const double ta = std::pow(t, alpha);
    CompensatedSum s;
    for (int k = 0; k <= (3 * n - 2) / 2; ++k) {
        const double gk = reciprocal_gamma(1.0 + alpha * k) - reciprocal_gamma(alpha + alpha * k);
        s.add(gk * std::pow(ta, k) * (std::pow(r2, k + 1) - std::pow(r1, k + 1)) / (k + 1));
    }
    return ta / alpha * s.value();
}

/// Lower bound for a_0 (x > pi/2, 0 < l < pi/2).
inline double a0_lower_bound(int n, double alpha, double rho, double t, double x, double ell = dottie()) {
    detail::check_bound_args(n, alpha, rho, t);
    const double pi = std::numbers::pi;
    detail::require(x > pi / 2, "a0_lower_bound: need x > pi/2");
    detail::require(ell > 0 && ell < pi / 2, "a0_lower_bound: need 0 < l < pi/2");
    const double ta = std::pow(t, alpha);
    const double r0 = 1.0 - std::pow(ell / x, 2.0 * rho);
    const double pre = std::cos(ell) / (2.0 * rho) * std::pow(x / ell, 2.0 * rho - 1.0) * alpha / std::pow(t, alpha * n);
    const double e1 = mittag_leffler(alpha, 1.0, ta).value;
    const double e0 = mittag_leffler(alpha, 1.0, ta * r0).value;
    return pre * (e1 - e0 + c0_term(n, alpha, rho, t, x, ell));
}

/// Upper bound for a_1 (x > 3 pi / 2).
inline double a1_upper_bound(int n, double alpha, double rho, double t, double x) {
    detail::check_bound_args(n, alpha, rho, t);
    const double pi = std::numbers::pi;
    detail::require(x > 1.5 * pi, "a1_upper_bound: need x > 3 pi/2");
    const double ta = std::pow(t, alpha);
    const double r2 = 1.0 - std::pow(pi / (2.0 * x), 2.0 * rho);
    const double r1 = 1.0 - std::pow(3.0 * pi / (2.0 * x), 2.0 * rho);
    const double pre = alpha / (2.0 * ta * rho) * std::pow(2.0 * x / pi, 2.0 * rho - 1.0);
    const double e2 = mittag_leffler(alpha, 1.0, ta * r2).value;
    const double e1 = mittag_leffler(alpha, 1.0, ta * r1).value;
    return pre * (e2 - e1 + c1_term(n, alpha, rho, t, x));
}

/// log of C m^{2rho-1} t^{beta(2rho-1) - alpha n} E_alpha(t^alpha), C = alpha l^{2-2rho}/(2 rho).
inline LogValue growth_comparator(int n, double alpha, double rho, double t, double beta, double m) {
    detail::check_bound_args(n, alpha, rho, t);
    detail::require(m > 0 && beta > 0, "comparator: need m, beta > 0");
    const double ell = dottie();
    const double logC = std::log(alpha) + (2.0 - 2.0 * rho) * std::log(ell) - std::log(2.0 * rho);
    const double l = logC + (2.0 * rho - 1.0) * std::log(m) + (beta * (2.0 * rho - 1.0) - alpha * n) * std::log(t) +
                     log_mittag_leffler(alpha, std::pow(t, alpha)).log_abs;
    return LogValue::from_log(l);
}

}  // namespace fracinv
