#include "qmrat/error.hpp"

namespace qmrat {

const char* error_kind_name(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::UnknownSymbol: return "UnknownSymbol";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::SubstitutionSingularity: return "SubstitutionSingularity";
        case ErrorKind::InfiniteGroup: return "InfiniteGroup";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::ClassificationFailed: return "ClassificationFailed";
        case ErrorKind::RelationViolation: return "RelationViolation";
        case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
        case ErrorKind::CoefficientOutsideBaseField: return "CoefficientOutsideBaseField";
        case ErrorKind::VerificationFailure: return "VerificationFailure";
        case ErrorKind::InvalidInstance: return "InvalidInstance";
        case ErrorKind::UnsupportedSymbolBase: return "UnsupportedSymbolBase";
        case ErrorKind::CertificateUnavailable: return "CertificateUnavailable";
        case ErrorKind::ProductFormulaViolation: return "ProductFormulaViolation";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DegenerateParameters: return "DegenerateParameters";
        case ErrorKind::MissingOmega: return "MissingOmega";
        case ErrorKind::Internal: return "Internal";
    }
    return "Error";
}

} // namespace qmrat
