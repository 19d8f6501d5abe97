#pragma once

#include <stdexcept>
#include <string>

namespace rmc {

enum class Errc {
    NotPrime,
    ReduciblePolynomial,
    DivisionByZero,
    LevelMismatch,
    NotADivisor,
    NoSquareRootOfMinusOne,
    NoSuchElement,
    NotFound,
    NotSquare,
    NotABasis,
    CoordinatesDependent,
    BadDimension,
    BudgetExceeded,
    PreconditionViolated,
    EvenCharacteristic,
    AlternatingObstruction,
    UnknownSuite,
    InvalidArgument,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::LevelMismatch: return "LevelMismatch";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::NoSquareRootOfMinusOne: return "NoSquareRootOfMinusOne";
        case Errc::NoSuchElement: return "NoSuchElement";
        case Errc::NotFound: return "NotFound";
        case Errc::NotSquare: return "NotSquare";
        case Errc::NotABasis: return "NotABasis";
        case Errc::CoordinatesDependent: return "CoordinatesDependent";
        case Errc::BadDimension: return "BadDimension";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::AlternatingObstruction: return "AlternatingObstruction";
        case Errc::UnknownSuite: return "UnknownSuite";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::Internal: return "Internal";
    }
    return "Error";
}

/// Library-wide exception. `code()` lets callers (notably the CLI) map
/// failure classes to exit codes without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace rmc
