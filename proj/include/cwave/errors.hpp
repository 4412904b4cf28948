#pragma once

#include <stdexcept>
#include <string>

namespace cwave {

enum class ErrorCode {
    ConfigParse,
    ClassMismatch,
    SymmetryMismatch,
    EmptyGrid,
    DegenerateEllipsoid,
    NonpositiveRadius,
    CoincidentEndpoints,
    InvalidGrid,
    OutOfDomain,
    UnsupportedOrder,
    NonmonotoneTimes,
    SecantDivergence,
    ClassUnderdetermined,
    LineSearchFailure,
    SingularNormalEquations,
    NegativeEntries,
    NonContraction,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    // Input/precondition problems exit with 2, runtime numerical failures with 3.
    bool is_validation() const {
        switch (code_) {
            case ErrorCode::SecantDivergence:
            case ErrorCode::LineSearchFailure:
            case ErrorCode::SingularNormalEquations:
            case ErrorCode::NonContraction:
                return false;
            default:
                return true;
        }
    }

    const char* code_name() const {
        switch (code_) {
            case ErrorCode::ConfigParse: return "ConfigParse";
            case ErrorCode::ClassMismatch: return "ClassMismatch";
            case ErrorCode::SymmetryMismatch: return "SymmetryMismatch";
            case ErrorCode::EmptyGrid: return "EmptyGrid";
            case ErrorCode::DegenerateEllipsoid: return "DegenerateEllipsoid";
            case ErrorCode::NonpositiveRadius: return "NonpositiveRadius";
            case ErrorCode::CoincidentEndpoints: return "CoincidentEndpoints";
            case ErrorCode::InvalidGrid: return "InvalidGrid";
            case ErrorCode::OutOfDomain: return "OutOfDomain";
            case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
            case ErrorCode::NonmonotoneTimes: return "NonmonotoneTimes";
            case ErrorCode::SecantDivergence: return "SecantDivergence";
            case ErrorCode::ClassUnderdetermined: return "ClassUnderdetermined";
            case ErrorCode::LineSearchFailure: return "LineSearchFailure";
            case ErrorCode::SingularNormalEquations: return "SingularNormalEquations";
            case ErrorCode::NegativeEntries: return "NegativeEntries";
            case ErrorCode::NonContraction: return "NonContraction";
        }
        return "Unknown";
    }

  private:
    ErrorCode code_;
};

}  // namespace cwave
