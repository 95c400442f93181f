#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "error.hpp"
#include "log_value.hpp"
#include "quadrature.hpp"

namespace fracinv {

enum class Regime { TaylorSeries, AsymptoticPos, AsymptoticNeg, Quadrature };

inline const char* to_string(Regime r) noexcept {
    switch (r) {
        case Regime::TaylorSeries: return "TaylorSeries";
        case Regime::AsymptoticPos: return "AsymptoticPos";
        case Regime::AsymptoticNeg: return "AsymptoticNeg";
        case Regime::Quadrature: return "Quadrature";
    }
    return "?";
}

struct EvalResult {
    double value = 0.0;
    double abs_error_bound = 0.0;
    int terms_used = 0;
    Regime regime = Regime::TaylorSeries;
};

/**
 * @brief Regime switching for the special functions.
 *
 * target_tol is relative: a result is acceptable when its error bound is below
 * target_tol * max(1, |value|).
 */
struct EvalPolicy {
    double series_cutoff = 10.0;
    double asym_cutoff = 25.0;
    int max_terms = 20000;
    double target_tol = 1e-12;

    void validate() const {
        detail::require(series_cutoff > 0 && asym_cutoff >= series_cutoff,
                        "EvalPolicy: need 0 < series_cutoff <= asym_cutoff");
        detail::require(max_terms > 0, "EvalPolicy: max_terms must be positive");
        detail::require(target_tol > 0 && target_tol < 1, "EvalPolicy: target_tol must be in (0,1)");
    }
};

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kLogMax = 709.0;

/// sin(pi x) with exact zeros at integers.
inline double sinpi(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    else if (r < -1.0) r += 2.0;
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

inline bool is_nonpositive_integer(double x) { return x <= 0 && x == std::floor(x); }

/// log|1/Gamma(x)| and its sign; sign 0 at the poles of Gamma.
inline LogValue log_rgamma(double x) {
    if (x > 0) return LogValue::from_log(-std::lgamma(x), Sign::Pos);
    if (is_nonpositive_integer(x)) return LogValue::zero();
    const double sp = sinpi(x);
    return LogValue::from_log(std::lgamma(1.0 - x) + std::log(std::abs(sp)) - std::log(kPi),
                              sp > 0 ? Sign::Pos : Sign::Neg);
}

}  // namespace detail

/// 1/Gamma(x) for all real x; exactly 0 at x = 0, -1, -2, ...
inline double reciprocal_gamma(double x) {
    detail::require(std::isfinite(x), "reciprocal_gamma: x must be finite");
    if (x > 0 && x < 170.0) return 1.0 / std::tgamma(x);
    return detail::log_rgamma(x).to_double();
}

/// gamma_alpha = (1-alpha) alpha^{alpha/(1-alpha)}.
inline double gamma_alpha(double alpha) {
    detail::require(alpha > 0 && alpha < 1, "gamma_alpha: alpha must be in (0,1)");
    return (1.0 - alpha) * std::pow(alpha, alpha / (1.0 - alpha));
}

/// Smallest integer strictly above (2/gamma_alpha)^{(1-alpha)/alpha}.
inline std::int64_t m_alpha(double alpha) {
    detail::require(alpha > 0 && alpha < 1, "m_alpha: alpha must be in (0,1)");
    const double lv = (1.0 - alpha) / alpha * std::log(2.0 / gamma_alpha(alpha));
    if (!(lv < std::log(9.0e18))) throw Error(ErrorKind::Overflow, "m_alpha: value exceeds int64 range");
    const double v = std::pow(2.0 / gamma_alpha(alpha), (1.0 - alpha) / alpha);
    return static_cast<std::int64_t>(std::floor(v)) + 1;
}

/// Fixed point of cos on [0, 1].
inline double dottie() {
    static const double value = [] {
        double x = 0.74;
        for (int i = 0; i < 50; ++i) {
            const double dx = (std::cos(x) - x) / (-std::sin(x) - 1.0);
            x -= dx;
            if (std::abs(dx) < 1e-17) break;
        }
        return x;
    }();
    return value;
}

/**
 * @brief Upper incomplete gamma Gamma(s, x) for real s (negative allowed), x >= 0.
 *
 * Series for the lower part when s > 0 and x < s+1, Lentz continued fraction for
 * x >= 1, and the downward recurrence Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x})/s otherwise.
 */
inline double gamma_upper_incomplete(double s, double x) {
    detail::require(std::isfinite(s) && std::isfinite(x) && x >= 0, "gamma_upper_incomplete: need x >= 0");
    if (x == 0.0) {
        detail::require(s > 0, "gamma_upper_incomplete: Gamma(s,0) diverges for s <= 0");
        return std::tgamma(s);
    }
    auto lower_series = [](double a, double y) {
        // gamma(a, y) = y^a e^{-y} sum y^n / (a (a+1) ... (a+n))
        double term = 1.0 / a, sum = term;
        for (int n = 1; n < 100000; ++n) {
            term *= y / (a + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-17) break;
        }
        return sum * std::exp(a * std::log(y) - y);
    };
    auto cont_frac = [](double a, double y) {
        const double tiny = 1e-300;
        double b = y + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
        for (int i = 1; i < 100000; ++i) {
            const double an = -i * (i - a);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < tiny) d = tiny;
            c = b + an / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            const double del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < 1e-16) break;
        }
        return std::exp(a * std::log(y) - y) * h;
    };
    if (s > 0 && x < s + 1.0) return std::tgamma(s) - lower_series(s, x);
    if (x >= 1.0) return cont_frac(s, x);
    // x < 1 and s <= 0 (or s > 0 handled above): recur down from s + m > 0.
    int m = static_cast<int>(std::floor(-s)) + 1;
    double base = s + m;  // in (0, 1]
    double g;
    if (base == 1.0 && detail::is_nonpositive_integer(s)) {
        // base hits 1 exactly: start one step lower at Gamma(0, x) = E1(x).
        base = 0.0;
        m -= 1;
        double sum = 0.0, term = 1.0;
        for (int k = 1; k < 1000; ++k) {
            term *= -x / k;
            const double add = term / k;
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum)) break;
        }
        g = -std::numbers::egamma - std::log(x) - sum;
    } else {
        g = std::tgamma(base) - lower_series(base, x);
    }
    for (int k = m - 1; k >= 0; --k) {
        const double a = s + k;
        g = (g - std::exp(a * std::log(x) - x)) / a;
    }
    return g;
}

namespace detail {

struct SeriesOutcome {
    EvalResult result;
    double max_abs_term = 0.0;
};

/// Taylor series of E_{alpha,beta}(z); throws RangeError on overflow.
inline SeriesOutcome ml_series(double alpha, double beta, double z, const EvalPolicy& pol) {
    const double lz = std::log(std::abs(z));
    const bool neg = z < 0;
    CompensatedSum sum;
    double max_abs = 0.0, prev = kInf, last = 0.0;
    int n = 0;
    for (; n < pol.max_terms; ++n) {
        const double la = n * lz - std::lgamma(alpha * n + beta);
        if (la > kLogMax) throw Error(ErrorKind::RangeError, "mittag_leffler: series term overflows");
        double t = std::exp(la);
        max_abs = std::max(max_abs, t);
        if (neg && (n % 2 == 1)) t = -t;
        sum.add(t);
        last = std::abs(t);
        if (n > 0 && last < prev && last <= 1e-17 * std::abs(sum.value())) break;
        if (n > 0 && last == 0.0 && prev == 0.0) break;
        prev = last;
    }
    if (n >= pol.max_terms) throw Error(ErrorKind::NonConvergence, "mittag_leffler: series term budget exhausted");
    SeriesOutcome out;
    out.result.value = sum.value();
    out.result.abs_error_bound = 2.0 * last + 4.0 * kEps * sum.abs_total();
    out.result.terms_used = n + 1;
    out.result.regime = Regime::TaylorSeries;
    out.max_abs_term = max_abs;
    return out;
}

/**
 * Real-axis integral representation of E_{alpha,beta}, 0 < alpha < 1, beta < 1 + alpha:
 *   E = int_0^inf K(chi) dchi  [+ (1/alpha) z^{(1-beta)/alpha} exp(z^{1/alpha}) when z > 0]
 *   K = chi^{(1-beta)/alpha} e^{-chi^{1/alpha}} (chi sin(pi(1-beta)) - z sin(pi(1-beta+alpha)))
 *       / (alpha pi (chi^2 - 2 chi z cos(pi alpha) + z^2)).
 */
inline EvalResult ml_integral(double alpha, double beta, double z, const EvalPolicy& pol) {
    const double p = (1.0 - beta) / alpha;
    const double inv_a = 1.0 / alpha;
    const double c0 = 1.0 / (alpha * kPi);
    const double s1 = std::sin(kPi * (1.0 - beta));
    const double s2 = sinpi(1.0 - beta + alpha);
    const double ca = std::cos(kPi * alpha);
    auto rest = [&](double chi) {
        const double e = std::exp(-std::pow(chi, inv_a));
        return c0 * e * (chi * s1 - z * s2) / (chi * chi - 2.0 * chi * z * ca + z * z);
    };
    const double chi_max = std::pow(60.0, alpha);
    const double c = std::min(1.0, chi_max);
    QuadOptions opt;
    opt.rel_tol = std::max(pol.target_tol * 0.1, 1e-14);
    opt.max_intervals = 4000;

    // [0, c]: chi = c u^q removes the chi^p endpoint singularity when p < 0.
    const double q = p < 0 ? 1.0 / (p + 1.0) : 1.0;
    auto head = [&](double u) {
        if (u <= 0) return 0.0;
        const double chi = c * std::pow(u, q);
        const double jac = c * q * std::pow(u, q - 1.0);
        return jac * std::pow(chi, p) * rest(chi);
    };
    std::vector<double> hb{0.0};
    const double az = std::abs(z);
    for (double b : {az * std::abs(ca), az}) {
        if (b > 0 && b < c) hb.push_back(std::pow(b / c, 1.0 / q));
    }
    std::sort(hb.begin(), hb.end());
    hb.push_back(1.0);
    auto r1 = integrate(head, std::span<const double>(hb), opt);

    auto tail = [&](double chi) { return std::pow(chi, p) * rest(chi); };
    std::vector<double> tb{c};
    for (double b : {az * std::abs(ca), az}) {
        if (b > c && b < chi_max) tb.push_back(b);
    }
    std::sort(tb.begin(), tb.end());
    tb.push_back(std::max(chi_max, c));
    QuadResult r2;
    if (chi_max > c) r2 = integrate(tail, std::span<const double>(tb), opt);
    else r2.converged = true;
    if (!r1.converged || !r2.converged)
        throw Error(ErrorKind::QuadratureFailure, "mittag_leffler: integral representation did not converge");

    EvalResult out;
    out.value = r1.value + r2.value;
    out.abs_error_bound = r1.abs_error + r2.abs_error;
    if (z > 0) {
        const double lres = p * std::log(z) + std::pow(z, inv_a) - std::log(alpha);
        if (lres > kLogMax) throw Error(ErrorKind::RangeError, "mittag_leffler: value exceeds double range");
        const double res = std::exp(lres);
        out.value += res;
        out.abs_error_bound += 4.0 * kEps * res;
    }
    out.abs_error_bound += 4.0 * kEps * std::abs(out.value);
    out.terms_used = r1.evaluations + r2.evaluations;
    out.regime = Regime::Quadrature;
    return out;
}

/// Algebraic part -sum_{k=1}^{6} z^{-k}/Gamma(beta - alpha k) and a bound from the next two terms.
inline EvalResult ml_algebraic_tail(double alpha, double beta, double z) {
    CompensatedSum sum;
    double zk = 1.0;
    for (int k = 1; k <= 6; ++k) {
        zk /= z;
        sum.add(-zk * reciprocal_gamma(beta - alpha * k));
    }
    const double t7 = std::abs(zk / z * reciprocal_gamma(beta - 7 * alpha));
    const double t8 = std::abs(zk / (z * z) * reciprocal_gamma(beta - 8 * alpha));
    EvalResult out;
    out.value = sum.value();
    out.abs_error_bound = std::max(t7, t8) + 4 * kEps * sum.abs_total();
    out.terms_used = 6;
    return out;
}

inline bool acceptable(const EvalResult& r, const EvalPolicy& pol) {
    return r.abs_error_bound <= pol.target_tol * std::max(1.0, std::abs(r.value));
}

}  // namespace detail

/**
 * @brief Two-parameter Mittag-Leffler function E_{alpha,beta}(z), z real.
 *
 * alpha in (0,1], beta > 0. For 0 < alpha < 1 every real z is covered; alpha = 1
 * is exact for beta = 1 and uses the series/positive asymptotics otherwise.
 * Throws RangeError when the value does not fit in a double (see log_mittag_leffler).
 */
inline EvalResult mittag_leffler(double alpha, double beta, double z, const EvalPolicy& pol = {}) {
    detail::require(alpha > 0 && alpha <= 1, "mittag_leffler: alpha must be in (0,1]");
    detail::require(beta > 0 && std::isfinite(beta), "mittag_leffler: beta must be positive");
    detail::require(std::isfinite(z), "mittag_leffler: z must be finite");
    pol.validate();
    using detail::kEps;

    if (z == 0.0) return {reciprocal_gamma(beta), kEps / std::tgamma(beta), 1, Regime::TaylorSeries};

    if (alpha == 1.0) {
        if (beta == 1.0) {
            if (z > detail::kLogMax) throw Error(ErrorKind::RangeError, "mittag_leffler: value exceeds double range");
            const double v = std::exp(z);
            return {v, 2 * kEps * v, 0, Regime::TaylorSeries};
        }
        if (std::abs(z) < pol.series_cutoff) return detail::ml_series(alpha, beta, z, pol).result;
        if (z >= pol.asym_cutoff) {
            if (z > detail::kLogMax) throw Error(ErrorKind::RangeError, "mittag_leffler: value exceeds double range");
            auto alg = detail::ml_algebraic_tail(alpha, beta, z);
            alg.value += std::pow(z, 1.0 - beta) * std::exp(z);
            alg.regime = Regime::AsymptoticPos;
            return alg;
        }
        if (z > 0) return detail::ml_series(alpha, beta, z, pol).result;
        throw Error(ErrorKind::Unsupported, "mittag_leffler: alpha = 1, beta != 1 on the far negative axis");
    }

    // beta >= 1 + alpha: step down with E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z.
    auto reduced = [&](auto&& self, double b) -> EvalResult {
        if (b < 1.0 + alpha) return detail::ml_integral(alpha, b, z, pol);
        const EvalResult lower = self(self, b - alpha);
        EvalResult r = lower;
        r.value = (lower.value - reciprocal_gamma(b - alpha)) / z;
        r.abs_error_bound = (lower.abs_error_bound + 2 * kEps * std::abs(lower.value)) / std::abs(z) +
                            2 * kEps * std::abs(r.value);
        return r;
    };

    if (z > 0) {
        const double lead = (1.0 - beta) / alpha * std::log(z) + std::pow(z, 1.0 / alpha) - std::log(alpha);
        if (lead > detail::kLogMax) throw Error(ErrorKind::RangeError, "mittag_leffler: value exceeds double range");
        if (z < pol.series_cutoff) return detail::ml_series(alpha, beta, z, pol).result;
        if (z >= pol.asym_cutoff) {
            auto alg = detail::ml_algebraic_tail(alpha, beta, z);
            const double ex = std::exp(lead);
            EvalResult r{ex + alg.value, alg.abs_error_bound + 2 * kEps * ex, alg.terms_used, Regime::AsymptoticPos};
            if (detail::acceptable(r, pol)) return r;
        }
        return reduced(reduced, beta);
    }

    const double x = -z;
    if (x < pol.series_cutoff && std::pow(x, 1.0 / alpha) <= 30.0) {
        auto s = detail::ml_series(alpha, beta, z, pol);
        if (detail::acceptable(s.result, pol)) return s.result;
    }
    if (x >= pol.asym_cutoff) {
        auto alg = detail::ml_algebraic_tail(alpha, beta, z);
        alg.regime = Regime::AsymptoticNeg;
        if (detail::acceptable(alg, pol) && alg.abs_error_bound <= pol.target_tol * std::abs(alg.value)) return alg;
    }
    return reduced(reduced, beta);
}

/// d/dz E_alpha(z) = E_{alpha,alpha}(z) / alpha.
inline EvalResult mittag_leffler_deriv(double alpha, double z, const EvalPolicy& pol = {}) {
    auto r = mittag_leffler(alpha, alpha, z, pol);
    r.value /= alpha;
    r.abs_error_bound /= alpha;
    return r;
}

/**
 * @brief log E_{alpha,beta}(z) with sign; finite far beyond double range.
 *
 * Above z^{1/alpha} = 600 the leading exponential term is used, whose relative
 * error there is below e^{-600}.
 */
inline LogValue log_mittag_leffler(double alpha, double beta, double z, const EvalPolicy& pol = {}) {
    detail::require(alpha > 0 && alpha <= 1, "log_mittag_leffler: alpha must be in (0,1]");
    detail::require(beta > 0, "log_mittag_leffler: beta must be positive");
    if (alpha == 1.0 && beta == 1.0) return LogValue::from_log(z);
    if (z > 0) {
        const double ez = std::pow(z, 1.0 / alpha);
        if (ez > 600.0) return LogValue::from_log(ez + (1.0 - beta) / alpha * std::log(z) - std::log(alpha));
    }
    return LogValue::from_double(mittag_leffler(alpha, beta, z, pol).value);
}

inline LogValue log_mittag_leffler(double alpha, double z) {
    detail::require(alpha > 0 && alpha <= 1, "log_mittag_leffler: alpha must be in (0,1]");
    return log_mittag_leffler(alpha, 1.0, z);
}

namespace detail {

struct WrightSeries {
    EvalResult result;
    bool well_conditioned = false;
};

/// Series of W_{-nu,mu}(z), z < 0, with a conditioning verdict.
inline WrightSeries wright_series(double nu, double mu, double z, const EvalPolicy& pol) {
    const double lz = std::log(-z);
    CompensatedSum sum;
    double max_abs = 0.0, last_env = kInf;
    int n = 0;
    WrightSeries out;
    for (; n < pol.max_terms; ++n) {
        const double arg = mu - nu * n;
        // Envelope ignores |sin| <= 1 so it is monotone once past the peak.
        const double lf = n * lz - std::lgamma(n + 1.0);
        const double env = lf + (arg > 0 ? -std::lgamma(arg) : std::lgamma(1.0 - arg) - std::log(kPi));
        if (env > 600.0) return out;  // hopeless cancellation
        const LogValue rg = log_rgamma(arg);
        double t = rg.is_zero() ? 0.0 : std::exp(lf + rg.log_abs) * rg.sign_int();
        if (n % 2 == 1) t = -t;
        sum.add(t);
        max_abs = std::max(max_abs, std::abs(t));
        const double s = std::abs(sum.value());
        const bool done = n > 2 && env < last_env && std::exp(env) <= 1e-17 * std::max(s, 1e-300);
        last_env = env;  // on exit: envelope of the last term, which bounds the tail
        if (done) break;
    }
    if (n >= pol.max_terms) return out;
    out.result.value = sum.value();
    out.result.abs_error_bound = 8 * kEps * sum.abs_total() + std::exp(last_env);
    out.result.terms_used = n + 1;
    out.result.regime = Regime::TaylorSeries;
    out.well_conditioned = acceptable(out.result, pol) &&
                           out.result.abs_error_bound <= pol.target_tol * std::abs(out.result.value);
    return out;
}

/// log(sin(u)/u) for 0 <= u < pi, accurate as u -> 0.
inline double log_sinc(double u) {
    if (u < 0.3) {
        const double u2 = u * u;
        // sinc(u) - 1 = -u^2/3! + u^4/5! - ... through u^10
        const double s = -u2 / 6.0 * (1.0 - u2 / 20.0 * (1.0 - u2 / 42.0 * (1.0 - u2 / 72.0 * (1.0 - u2 / 110.0))));
        return std::log1p(s);
    }
    return std::log(std::sin(u) / u);
}

struct ContourValue {
    double log_scale = 0.0;  // W = exp(log_scale) * integral
    double integral = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
};

/**
 * Steepest-descent Hankel contour for W_{-nu,mu}(-x), x > 0. With X = x^{1/(1-nu)},
 *   W = X^{1-mu}/pi * int_0^pi e^{-X a(phi)} rho^{1-mu} [cos((1-mu)phi) + g(phi) sin((1-mu)phi)] dphi,
 * rho = (sin(nu phi)/sin phi)^{1/(1-nu)}, a = rho^nu sin((1-nu)phi)/sin phi,
 * g = (nu cot(nu phi) - cot phi)/(1-nu). a(0) = gamma_nu, so e^{-X gamma_nu} is pulled out.
 */
inline ContourValue wright_contour(double nu, double mu, double x, double rel_tol) {
    const double X = std::exp(std::log(x) / (1.0 - nu));
    const double g0 = gamma_alpha(nu);
    const double inv = 1.0 / (1.0 - nu);
    const double lnu = std::log(nu);
    auto f = [&](double phi) {
        const double ls = log_sinc(phi);
        const double lsn = log_sinc(nu * phi);
        // log a - log gamma_nu, free of cancellation near phi = 0.
        const double d = nu * inv * (lsn - ls) + (log_sinc((1.0 - nu) * phi) - ls);
        const double lr = (lnu + lsn - ls) * inv;  // log rho
        const double ex = -X * g0 * std::expm1(d) + (1.0 - mu) * lr;
        if (!(ex > -745.0)) return 0.0;
        const double gf = (nu / std::tan(nu * phi) - 1.0 / std::tan(phi)) * inv;
        const double br = std::cos((1.0 - mu) * phi) + gf * std::sin((1.0 - mu) * phi);
        return std::exp(ex) * br;
    };
    std::vector<double> br{0.0};
    const double width = 1.0 / std::sqrt(X * nu * g0);
    for (double w = width; w < kPi * 0.95; w *= 2.0) br.push_back(w);
    br.push_back(kPi);
    QuadOptions opt;
    opt.rel_tol = rel_tol;
    opt.max_intervals = 4000;
    const auto r = integrate(f, std::span<const double>(br), opt);
    if (!r.converged) throw Error(ErrorKind::QuadratureFailure, "wright: contour integral did not converge");
    ContourValue cv;
    cv.log_scale = (1.0 - mu) * std::log(X) - X * g0 - std::log(kPi);
    cv.integral = r.value;
    cv.abs_error = r.abs_error + 4 * kEps * std::abs(r.value);
    cv.evaluations = r.evaluations;
    return cv;
}

inline void check_wright_args(double nu, double mu, double z) {
    require(nu > 0 && nu < 1, "wright: nu must be in (0,1)");
    require(std::isfinite(mu), "wright: mu must be finite");
    require(std::isfinite(z) && z <= 0, "wright: z must be <= 0");
}

}  // namespace detail

/**
 * @brief Wright function W_{-nu,mu}(z) on the non-positive axis.
 *
 * Series where it is well conditioned, otherwise the steepest-descent contour
 * (regime Quadrature). Values below the double range come back as 0; use
 * log_wright_neg for those.
 */
inline EvalResult wright_neg(double nu, double mu, double z, const EvalPolicy& pol = {}) {
    detail::check_wright_args(nu, mu, z);
    pol.validate();
    if (z == 0.0) return {reciprocal_gamma(mu), detail::kEps * std::abs(reciprocal_gamma(mu)), 1, Regime::TaylorSeries};
    auto s = detail::wright_series(nu, mu, z, pol);
    if (s.well_conditioned) return s.result;
    const auto cv = detail::wright_contour(nu, mu, -z, std::max(pol.target_tol * 0.1, 1e-14));
    const double scale = std::exp(cv.log_scale);
    return {scale * cv.integral, scale * cv.abs_error, cv.evaluations, Regime::Quadrature};
}

/// log|W_{-nu,mu}(z)| with sign, z <= 0; accurate deep into the tail.
inline LogValue log_wright_neg(double nu, double mu, double z, const EvalPolicy& pol = {}) {
    detail::check_wright_args(nu, mu, z);
    if (z == 0.0) return LogValue::from_double(reciprocal_gamma(mu));
    auto s = detail::wright_series(nu, mu, z, pol);
    if (s.well_conditioned) return LogValue::from_double(s.result.value);
    const auto cv = detail::wright_contour(nu, mu, -z, std::max(pol.target_tol * 0.1, 1e-14));
    auto v = LogValue::from_double(cv.integral);
    if (!v.is_zero()) v.log_abs += cv.log_scale;
    return v;
}

/**
 * @brief Leading tail asymptotic of W_{-nu,mu}(z) as z -> -inf.
 *
 * log W ~ (1/2 - mu) log Y - Y + log A0, Y = (1-nu)(nu^nu |z|)^{1/(1-nu)},
 * A0 = (nu/(1-nu))^{1-mu} / sqrt(2 pi nu). Requires Y > 1.
 */
inline LogValue log_wright_tail(double nu, double mu, double z) {
    detail::check_wright_args(nu, mu, z);
    const double Y = (1.0 - nu) * std::pow(std::pow(nu, nu) * (-z), 1.0 / (1.0 - nu));
    if (!(Y > 1.0)) throw Error(ErrorKind::DomainError, "log_wright_tail: |z| too small for the tail expansion (Y <= 1)");
    const double logA0 = (1.0 - mu) * std::log(nu / (1.0 - nu)) - 0.5 * std::log(2.0 * detail::kPi * nu);
    return LogValue::from_log((0.5 - mu) * std::log(Y) - Y + logA0);
}

enum class EstimateKind { Upper, Lower };

namespace detail {

struct EstimateTerms {
    LogValue ml_part;              // alpha E'(r), or alpha E'(r) / r^{n-1}
    std::vector<double> poly;      // remaining signed terms (as doubles)
};

inline EstimateTerms estimate_terms(EstimateKind kind, int n, double alpha, double r) {
    require(n >= 2, "ml_estimate_rhs: n must be >= 2");
    require(alpha >= 1.0 / n && alpha <= 1.0, "ml_estimate_rhs: alpha must be in [1/n, 1]");
    require(r > 0 && std::isfinite(r), "ml_estimate_rhs: r must be positive");
    EstimateTerms t;
    t.ml_part = log_mittag_leffler(alpha, alpha, r);  // alpha E'_alpha = E_{alpha,alpha}
    if (kind == EstimateKind::Upper) {
        const int top = (3 * n - 2) / 2 - 1;
        for (int k = 0; k <= top; ++k) {
            const double gk = reciprocal_gamma(1.0 + alpha * k) - reciprocal_gamma(alpha + alpha * k);
            t.poly.push_back(gk * std::pow(r, k));
        }
    } else {
        const int K = static_cast<int>(std::floor(n - 1 + 1.0 / (2.0 * alpha)));
        t.ml_part.log_abs -= (n - 1) * std::log(r);
        for (int k = 0; k <= K; ++k)
            t.poly.push_back(-reciprocal_gamma(alpha + alpha * k) * std::pow(r, k + 1 - n));
        for (int k = n - 1; k <= K; ++k)
            t.poly.push_back(reciprocal_gamma(1.0 + alpha * k - alpha * (n - 1)) * std::pow(r, k + 1 - n));
    }
    return t;
}

}  // namespace detail

/// Right-hand side of the Mittag-Leffler upper/lower estimate, in log form.
inline LogValue ml_estimate_rhs_log(EstimateKind kind, int n, double alpha, double r) {
    const auto t = detail::estimate_terms(kind, n, alpha, r);
    if (t.ml_part.log_abs < 700.0) {
        CompensatedSum s;
        s.add(t.ml_part.to_double());
        for (double p : t.poly) s.add(p);
        return LogValue::from_double(s.value());
    }
    LogValue acc = t.ml_part;
    for (double p : t.poly) acc += LogValue::from_double(p);
    return acc;
}

/**
 * @brief Upper: alpha E'(r) + sum_{k<floor((3n-2)/2)} gamma_k r^k.
 * Lower: (alpha/r^{n-1}) E'(r) - r^{1-n} sum_{k<=K} lambda_k r^k + r^{1-n} sum_{k=n-1}^{K} beta_k r^k,
 * K = floor(n - 1 + 1/(2 alpha)).
 */
inline double ml_estimate_rhs(EstimateKind kind, int n, double alpha, double r) {
    const auto v = ml_estimate_rhs_log(kind, n, alpha, r);
    if (v.log_abs > detail::kLogMax) throw Error(ErrorKind::RangeError, "ml_estimate_rhs: value exceeds double range");
    return v.to_double();
}

/**
 * @brief Signed slack of an estimate and a rounding bound for it.
 *
 * slack = rhs - E for Upper, E - rhs for Lower. When E overflows doubles the slack
 * is the log ratio instead. The inequality is established strictly when
 * slack > error_bound.
 */
struct EstimateMargin {
    double slack = 0.0;
    double error_bound = 0.0;
    bool log_ratio = false;
};

inline EstimateMargin ml_estimate_margin(EstimateKind kind, int n, double alpha, double r) {
    const auto t = detail::estimate_terms(kind, n, alpha, r);
    const auto lE = log_mittag_leffler(alpha, r);
    const double sgn = kind == EstimateKind::Upper ? 1.0 : -1.0;
    EstimateMargin m;
    if (t.ml_part.log_abs < 700.0 && lE.log_abs < 700.0) {
        CompensatedSum s;
        s.add(sgn * t.ml_part.to_double());
        for (double p : t.poly) s.add(sgn * p);
        s.add(-sgn * lE.to_double());
        m.slack = s.value();
        m.error_bound = 1e-12 * s.abs_total();
        return m;
    }
    LogValue rhs = t.ml_part;
    for (double p : t.poly) rhs += LogValue::from_double(p);
    m.log_ratio = true;
    m.slack = sgn * (rhs.log_abs - lE.log_abs);
    m.error_bound = 1e-12 * std::max(std::abs(rhs.log_abs), 1.0);
    return m;
}

}  // namespace fracinv
