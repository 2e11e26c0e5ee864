#include "invforge/error.hpp"

namespace invforge {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotAGenerator: return "NotAGenerator";
        case ErrorKind::LimitExceeded: return "LimitExceeded";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::CoefficientOutOfRange: return "CoefficientOutOfRange";
        case ErrorKind::BadCongruence: return "BadCongruence";
        case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::DegenerateSubgroup: return "DegenerateSubgroup";
        case ErrorKind::BadFactorization: return "BadFactorization";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::OddCofactor: return "OddCofactor";
        case ErrorKind::NoMatchingCase: return "NoMatchingCase";
        case ErrorKind::UnverifiedParams: return "UnverifiedParams";
        case ErrorKind::NotAPermutation: return "NotAPermutation";
        case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace invforge
