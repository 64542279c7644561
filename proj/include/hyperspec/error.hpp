#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperspec {

enum class ErrorCode {
    OutOfRangeVertex,
    DuplicateEdge,
    EmptyEdge,
    EmptyHypergraph,
    TooFewEdges,
    OverlappingSets,
    EmptySet,
    InvalidIndex,
    ParseError,
    NonUniform,
    SizeCapExceeded,
    TooManyEdgesRequested,
    LengthMismatch,
    NotIntersecting,
    MismatchedVertexCount,
    MismatchedEdgeCount,
    WitnessViolation,
    SizeMismatch,
    NoDisjointEdge,
    StepOutOfRange,
    HypothesesViolated,
    PreconditionViolated,
    PoolExhausted,
    DrcFailed,
    NoQualifyingSubset,
    WidthTooLarge,
    BudgetExhausted,
    CertificateFailed,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Domain error raised by every hyperspec operation.
///
/// `witness` is populated for NoDisjointEdge with the proper 2-coloring
/// implied by the missing edge. `line` is set for ParseError.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    std::optional<std::size_t> line;
    std::optional<std::vector<std::uint8_t>> witness;

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace hyperspec
