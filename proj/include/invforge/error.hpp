#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invforge {

enum class ErrorKind {
    NotPrime,
    NotIrreducible,
    DegreeMismatch,
    FieldMismatch,
    DivisionByZero,
    NotAGenerator,
    LimitExceeded,
    ZeroPolynomial,
    SyntaxError,
    CoefficientOutOfRange,
    BadCongruence,
    CharacteristicTwo,
    IndexOutOfRange,
    NotADivisor,
    DegenerateSubgroup,
    BadFactorization,
    NotCoprime,
    OddCofactor,
    NoMatchingCase,
    UnverifiedParams,
    NotAPermutation,
    UnsupportedFamily,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind; the
/// message is a one-line diagnostic naming the violated precondition.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failures also report the byte offset in the input text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error(ErrorKind::SyntaxError, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace invforge
