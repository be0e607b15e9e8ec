#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace riordan {

/// Every failure the engine reports. The CLI maps input-side codes to exit
/// status 2 and mathematical ones to exit status 3.
enum class Errc {
    // series
    ZeroConstantTerm,
    NonzeroInnerConstant,
    BadOrder,
    InsufficientPrecision,
    NonSquareConstant,
    OutOfPrecision,
    NonUnitDivisor,
    // riordan / halves / antecedent
    InvalidPair,
    InsufficientRows,
    ConsistencyError,
    NonSquareLeadingCoefficient,
    DegenerateGamma,
    IncompatibleInputs,
    // moments
    InsufficientTerms,
    TerminatedFraction,
    NotNormalized,
    // input side
    SyntaxError,
    IoError,
    EmptyDb,
    Usage,
};

std::string_view errc_name(Errc code) noexcept;

/// True for failures caused by malformed input rather than by the mathematics.
bool is_input_error(Errc code) noexcept;

struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);
    Error(Errc code, const std::string& message, SourceSpan span);

    Errc code() const noexcept { return code_; }
    /// The message without the error-code prefix.
    const std::string& detail() const noexcept { return detail_; }
    const std::optional<SourceSpan>& span() const noexcept { return span_; }

private:
    Errc code_;
    std::string detail_;
    std::optional<SourceSpan> span_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace riordan
