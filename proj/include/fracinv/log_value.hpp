#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracinv {

enum class Sign { Neg = -1, Zero = 0, Pos = 1 };

/**
 * @brief A real number stored as sign and log of its magnitude.
 *
 * Zero is {Zero, -inf}. Values that overflow double (e^{1000}) are ordinary here.
 */
struct LogValue {
    Sign sign = Sign::Zero;
    double log_abs = -std::numeric_limits<double>::infinity();

    static LogValue zero() noexcept { return {}; }

    static LogValue from_log(double log_abs, Sign s = Sign::Pos) noexcept {
        if (s == Sign::Zero || log_abs == -std::numeric_limits<double>::infinity()) return zero();
        return {s, log_abs};
    }

    static LogValue from_double(double x) noexcept {
        if (x == 0.0) return zero();
        return {x > 0 ? Sign::Pos : Sign::Neg, std::log(std::abs(x))};
    }

    bool is_zero() const noexcept { return sign == Sign::Zero; }

    double to_double() const noexcept {
        if (sign == Sign::Zero) return 0.0;
        const double m = std::exp(log_abs);
        return sign == Sign::Neg ? -m : m;
    }

    int sign_int() const noexcept { return static_cast<int>(sign); }

    LogValue operator-() const noexcept {
        LogValue r = *this;
        if (sign == Sign::Pos) r.sign = Sign::Neg;
        else if (sign == Sign::Neg) r.sign = Sign::Pos;
        return r;
    }

    friend LogValue operator*(LogValue a, LogValue b) noexcept {
        if (a.is_zero() || b.is_zero()) return zero();
        const Sign s = (a.sign == b.sign) ? Sign::Pos : Sign::Neg;
        return {s, a.log_abs + b.log_abs};
    }

    friend LogValue operator/(LogValue a, LogValue b) noexcept {
        if (a.is_zero()) return zero();
        const Sign s = (a.sign == b.sign) ? Sign::Pos : Sign::Neg;
        return {s, a.log_abs - b.log_abs};
    }

    /// Signed log-sum-exp. Exact cancellation yields zero.
    friend LogValue operator+(LogValue a, LogValue b) noexcept {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.log_abs < b.log_abs) std::swap(a, b);
        const double d = std::exp(b.log_abs - a.log_abs);  // in (0, 1]
        if (a.sign == b.sign) return {a.sign, a.log_abs + std::log1p(d)};
        if (d == 1.0) return zero();
        return {a.sign, a.log_abs + std::log1p(-d)};
    }

    friend LogValue operator-(LogValue a, LogValue b) noexcept { return a + (-b); }

    LogValue& operator+=(LogValue o) noexcept { return *this = *this + o; }
    LogValue& operator*=(LogValue o) noexcept { return *this = *this * o; }

    /// Ordering as real numbers.
    friend bool operator<(LogValue a, LogValue b) noexcept {
        const int sa = a.sign_int(), sb = b.sign_int();
        if (sa != sb) return sa < sb;
        if (sa == 0) return false;
        return sa > 0 ? a.log_abs < b.log_abs : a.log_abs > b.log_abs;
    }
    friend bool operator<=(LogValue a, LogValue b) noexcept { return !(b < a); }
    friend bool operator==(LogValue a, LogValue b) noexcept {
        return a.sign == b.sign && (a.sign == Sign::Zero || a.log_abs == b.log_abs);
    }
};

}  // namespace fracinv
