#pragma once

#include <stdexcept>
#include <string>

namespace graphflow {

// Stable machine-readable codes; the CLI forwards them as `error.code`.
enum class ErrorCode {
  VertexOutOfRange,
  DuplicateEdge,
  EmptyVertexSet,
  DimensionMismatch,
  EmptySet,
  NotAPath,
  NotAnLGraph,
  NotAnAttractor,
  NotStrictlyIncreasing,
  InvalidMorseDecomposition,
  NotIrreducible,
  NotACommunicatingClass,
  NotSquare,
  NegativeEntry,
  RowSumViolation,
  EmptyTarget,
  SingularSystem,
  HypothesisViolated,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphflow
