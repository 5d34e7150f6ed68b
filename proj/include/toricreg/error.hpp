#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricreg {

enum class ErrorKind {
    NotPrimePower,
    Overflow,
    DivisionByZero,
    InvalidSpec,
    EdgeExists,
    TooLarge,
    LengthMismatch,
    NotHomogeneous,
    CeilingExceeded,
    NotSameParityEar,
    IndexOutOfRange,
    InvalidWitness,
    NotApplicable,
    ParseError,
    IoError,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Input-dependent failures (bad user input) as opposed to internal inconsistencies.
inline bool is_input_error(ErrorKind kind) noexcept {
    return kind != ErrorKind::Internal && kind != ErrorKind::CeilingExceeded;
}

}  // namespace toricreg
