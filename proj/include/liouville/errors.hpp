#pragma once

#include <stdexcept>
#include <string>

namespace liouville {

enum class ErrorCode {
    DegreeCapExceeded,
    InvalidPoint,
    PrecisionExhausted,
    ArityMismatch,
    BudgetExceeded,
    ZeroPolynomial,
    NodesNotSeparated,
    AmbiguityOverflow,
    ResolutionCapExceeded,
    DependentBasis,
    PossiblyZero,
    NoKernel,
    NonRationalPoint,
    SublevelEmpty,
    SeparationFailed,
    RadiusExceeded,
    PolicyViolation,
    QuadratureStall,
    ZeroAtCenter,
    DegreeBudgetInfeasible,
    EmptySample,
    ConfigInvalid,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace liouville
