#include "riordan/error.hpp"

namespace riordan {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
        case Errc::NonzeroInnerConstant: return "NonzeroInnerConstant";
        case Errc::BadOrder: return "BadOrder";
        case Errc::InsufficientPrecision: return "InsufficientPrecision";
        case Errc::NonSquareConstant: return "NonSquareConstant";
        case Errc::OutOfPrecision: return "OutOfPrecision";
        case Errc::NonUnitDivisor: return "NonUnitDivisor";
        case Errc::InvalidPair: return "InvalidPair";
        case Errc::InsufficientRows: return "InsufficientRows";
        case Errc::ConsistencyError: return "ConsistencyError";
        case Errc::NonSquareLeadingCoefficient: return "NonSquareLeadingCoefficient";
        case Errc::DegenerateGamma: return "DegenerateGamma";
        case Errc::IncompatibleInputs: return "IncompatibleInputs";
        case Errc::InsufficientTerms: return "InsufficientTerms";
        case Errc::TerminatedFraction: return "TerminatedFraction";
        case Errc::NotNormalized: return "NotNormalized";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::IoError: return "IoError";
        case Errc::EmptyDb: return "EmptyDb";
        case Errc::Usage: return "Usage";
    }
    return "Unknown";
}

bool is_input_error(Errc code) noexcept {
    switch (code) {
        case Errc::SyntaxError:
        case Errc::IoError:
        case Errc::EmptyDb:
        case Errc::Usage:
            return true;
        default:
            return false;
    }
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), detail_(message) {}

Error::Error(Errc code, const std::string& message, SourceSpan span)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      detail_(message),
      span_(span) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace riordan
