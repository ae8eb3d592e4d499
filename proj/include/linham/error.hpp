#pragma once

#include <stdexcept>
#include <string>

namespace linham {

// Typed error kinds; the CLI maps these onto exit codes.
enum class ErrorKind {
    DivisionByZero,
    PoleAt,
    ParseError,
    UnsupportedFunction,
    NonSquare,
    OddDimension,
    DimensionMismatch,
    AsymmetricBlock,
    NotHamiltonian,
    NotSymplectic,
    NotNilpotent,
    UnreachableKernelDim,
    NotAbelian,
    DimensionTooLarge,
    IrrationalEigenvalueRatio,
    ScaleNotRepresentable,
    UnclassifiableAlgebra,
    NoMatch,
    NonConstantRatio,
    VerificationFailure,
    LemmaViolation,
    PoleOnPath,
    StepCountTooSmall,
    DegreeCapExceeded,
    InvalidArgument,
    Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace linham
