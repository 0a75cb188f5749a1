#pragma once

#include <stdexcept>
#include <string>

namespace qmrat {

// Every failure the library can signal, one kind per contract clause.
enum class ErrorKind {
    UnknownSymbol,
    ZeroDenominator,
    SubstitutionSingularity,
    InfiniteGroup,
    NotUnimodular,
    ClassificationFailed,
    RelationViolation,
    ZeroCoefficient,
    CoefficientOutsideBaseField,
    VerificationFailure,
    InvalidInstance,
    UnsupportedSymbolBase,
    CertificateUnavailable,
    ProductFormulaViolation,
    ParseError,
    DegenerateParameters,
    MissingOmega,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k) noexcept;

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, std::string(error_kind_name(kind)) + ": " + msg);
}

} // namespace qmrat
