#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fracinv {

enum class ErrorKind {
    DomainError,
    NonConvergence,
    QuadratureFailure,
    Unsupported,
    InsufficientData,
    Overflow,
    RangeError,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::QuadratureFailure: return "QuadratureFailure";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::RangeError: return "RangeError";
    }
    return "Unknown";
}

/** @brief Single exception type for the library; kind() says what went wrong. */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {

inline void require(bool cond, const char* what) {
    if (!cond) throw Error(ErrorKind::DomainError, what);
}

}  // namespace detail
}  // namespace fracinv
