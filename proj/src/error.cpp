#include "linham/error.hpp"

namespace linham {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::PoleAt: return "PoleAt";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnsupportedFunction: return "UnsupportedFunction";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::AsymmetricBlock: return "AsymmetricBlock";
        case ErrorKind::NotHamiltonian: return "NotHamiltonian";
        case ErrorKind::NotSymplectic: return "NotSymplectic";
        case ErrorKind::NotNilpotent: return "NotNilpotent";
        case ErrorKind::UnreachableKernelDim: return "UnreachableKernelDim";
        case ErrorKind::NotAbelian: return "NotAbelian";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::IrrationalEigenvalueRatio: return "IrrationalEigenvalueRatio";
        case ErrorKind::ScaleNotRepresentable: return "ScaleNotRepresentable";
        case ErrorKind::UnclassifiableAlgebra: return "UnclassifiableAlgebra";
        case ErrorKind::NoMatch: return "NoMatch";
        case ErrorKind::NonConstantRatio: return "NonConstantRatio";
        case ErrorKind::VerificationFailure: return "VerificationFailure";
        case ErrorKind::LemmaViolation: return "LemmaViolation";
        case ErrorKind::PoleOnPath: return "PoleOnPath";
        case ErrorKind::StepCountTooSmall: return "StepCountTooSmall";
        case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace linham
