#ifndef ATMATCH_ERROR_HPP
#define ATMATCH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace atmatch {

enum class ErrorCode {
    // plane_graph
    LoopEdge,
    ParallelEdge,
    AsymmetricRotation,
    EulerViolation,
    UnknownVertex,
    InvalidAnchor,
    Disconnected,
    NotSimpleBoundary,
    NotAChord,
    EdgeOnChordSide,
    HasChord,
    BoundaryNotSimple,
    EdgeNotOnBoundary,
    // polynomial / oracles
    NegativeExponent,
    PreconditionViolated,
    SearchBudgetExceeded,
    // extractor
    InternalProofViolation,
    // io / generators / cli
    ParseError,
    UnknownName,
    UsageError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace atmatch

#endif
