#pragma once

#include <cmath>
#include <numbers>
#include <variant>

#include "error.hpp"
#include "log_value.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace fracinv {

struct BoundEnvelope {
    LogValue lower;
    LogValue upper;
};

namespace detail {

inline void check_kernel_args(int d, double t, double r) {
    require(d >= 1, "kernel: dimension must be >= 1");
    require(t > 0 && std::isfinite(t), "kernel: t must be positive");
    require(r >= 0 && std::isfinite(r), "kernel: r must be >= 0");
}

/// log(a^2 + b^2) without overflow.
inline double log_hypot2(double a, double b) {
    a = std::abs(a);
    b = std::abs(b);
    const double hi = std::max(a, b), lo = std::min(a, b);
    if (hi == 0.0) return -kInf;
    const double q = lo / hi;
    return 2.0 * std::log(hi) + std::log1p(q * q);
}

}  // namespace detail

/// Heat kernel (4 pi t)^{-d/2} exp(-r^2/(4t)) as a log.
inline LogValue log_gaussian_density(int d, double t, double r) {
    detail::check_kernel_args(d, t, r);
    return LogValue::from_log(-r * r / (4.0 * t) - 0.5 * d * std::log(4.0 * std::numbers::pi * t));
}

inline double gaussian_density(int d, double t, double r) { return log_gaussian_density(d, t, r).to_double(); }

/// Poisson kernel Gamma((d+1)/2) / pi^{(d+1)/2} * t / (r^2 + t^2)^{(d+1)/2} as a log.
inline LogValue log_cauchy_density(int d, double t, double r) {
    detail::check_kernel_args(d, t, r);
    const double h = 0.5 * (d + 1);
    return LogValue::from_log(std::lgamma(h) - h * std::log(std::numbers::pi) + std::log(t) -
                              h * detail::log_hypot2(r, t));
}

inline double cauchy_density(int d, double t, double r) { return log_cauchy_density(d, t, r).to_double(); }

/// c * t / (r^2 + t^{1/rho})^{(d+2rho)/2}, the two-sided shape of the rho-stable density.
inline LogValue log_stable_envelope(double rho, int d, double t, double r, double c = 1.0) {
    detail::check_kernel_args(d, t, r);
    detail::require(rho > 0 && rho < 1, "stable_envelope: rho must be in (0,1)");
    detail::require(c > 0, "stable_envelope: constant must be positive");
    const double tt = std::pow(t, 1.0 / rho);
    const double lden = detail::log_hypot2(r, std::sqrt(tt));
    return LogValue::from_log(std::log(c) + std::log(t) - 0.5 * (d + 2.0 * rho) * lden);
}

inline BoundEnvelope stable_envelope(double rho, int d, double t, double r, double c1 = 1.0, double c2 = 1.0) {
    detail::require(c1 <= c2, "stable_envelope: need c1 <= c2");
    return {log_stable_envelope(rho, d, t, r, c1), log_stable_envelope(rho, d, t, r, c2)};
}

/**
 * @brief F(y) = (1/pi) int_0^inf exp(-s^{2 rho}) cos(s y) ds.
 *
 * Integrated over half periods between zeros of cos(s y); the integrand is
 * negligible past s^{2 rho} = 40. Absolute accuracy about 1e-12.
 */
inline double higher_order_profile(double rho, double y) {
    detail::require(rho > 0, "higher_order_profile: rho must be positive");
    y = std::abs(y);
    const double two_rho = 2.0 * rho;
    if (y == 0.0) return std::tgamma(1.0 + 1.0 / two_rho) / std::numbers::pi;
    auto f = [&](double s) { return std::exp(-std::pow(s, two_rho)) * std::cos(s * y); };
    const double s_max = std::pow(40.0, 1.0 / two_rho);
    QuadOptions opt;
    opt.abs_tol = 1e-14;
    opt.rel_tol = 1e-12;
    CompensatedSum sum;
    const double half = std::numbers::pi / y;
    double a = 0.0, b = 0.5 * half;
    while (a < s_max) {
        const double hi = std::min(b, s_max);
        const auto r = integrate(f, a, hi, opt);
        if (!r.converged) throw Error(ErrorKind::QuadratureFailure, "higher_order_profile: segment did not converge");
        sum.add(r.value);
        a = hi;
        b += half;
    }
    return sum.value() / std::numbers::pi;
}

/// Fundamental solution of u_t + (-Delta)^rho u = 0 in one dimension: t^{-1/(2rho)} F(t^{-1/(2rho)} x).
inline EvalResult higher_order_kernel_1d(double rho, double t, double x) {
    detail::require(rho >= 1, "higher_order_kernel_1d: rho must be >= 1");
    detail::require(t > 0 && std::isfinite(x), "higher_order_kernel_1d: need t > 0, finite x");
    const double sc = std::pow(t, -1.0 / (2.0 * rho));
    const double v = sc * higher_order_profile(rho, sc * x);
    return {v, 1e-12 * sc, 0, Regime::Quadrature};
}

/// K exp(-omega |y|^{2rho/(2rho-1)}), the decay envelope of F.
inline double f_bound(double rho, double K, double omega, double y) {
    detail::require(rho > 1, "f_bound: rho must be > 1");
    return K * std::exp(-omega * std::pow(std::abs(y), 2.0 * rho / (2.0 * rho - 1.0)));
}

enum class KernelClass { Gaussian, Cauchy, HigherOrder1D, Envelope };

/// Which kernel family applies to (rho, d); Unsupported for rho > 1 in d >= 2.
inline KernelClass kernel_class(double rho, int d) {
    detail::require(rho > 0 && std::isfinite(rho), "kernel_class: rho must be positive");
    detail::require(d >= 1, "kernel_class: dimension must be >= 1");
    if (rho == 1.0) return KernelClass::Gaussian;
    if (rho == 0.5) return KernelClass::Cauchy;
    if (rho > 1.0) {
        if (d != 1) throw Error(ErrorKind::Unsupported, "rho > 1 kernels are only available in one dimension");
        return KernelClass::HigherOrder1D;
    }
    return KernelClass::Envelope;
}

/// Exact density kernel at time t and radius r, for the classes that have one.
inline LogValue log_kernel(double rho, int d, double t, double r) {
    switch (kernel_class(rho, d)) {
        case KernelClass::Gaussian: return log_gaussian_density(d, t, r);
        case KernelClass::Cauchy: return log_cauchy_density(d, t, r);
        case KernelClass::HigherOrder1D: return LogValue::from_double(higher_order_kernel_1d(rho, t, r).value);
        case KernelClass::Envelope: break;
    }
    throw Error(ErrorKind::Unsupported, "no closed-form kernel for this rho; use stable_envelope");
}

/**
 * @brief Solution of u_t + (-Delta)^rho u = u from a point mass: e^t times the kernel.
 *
 * Exact for rho = 1/2, rho = 1 and rho > 1 (d = 1); an envelope with unit
 * constants for other rho in (0,1).
 */
inline std::variant<LogValue, BoundEnvelope> classical_solution(double rho, int d, double t, double r) {
    const LogValue et = LogValue::from_log(t);
    if (kernel_class(rho, d) == KernelClass::Envelope) {
        auto env = stable_envelope(rho, d, t, r);
        return BoundEnvelope{env.lower * et, env.upper * et};
    }
    return log_kernel(rho, d, t, r) * et;
}

}  // namespace fracinv
