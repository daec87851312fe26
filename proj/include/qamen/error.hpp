#pragma once

#include <stdexcept>
#include <string>

namespace qamen {

// Error taxonomy shared by every module. The code string is what the CLI
// reports in machine-readable failure output.
enum class ErrorCode {
  NotPrime,
  FieldMismatch,
  ShapeMismatch,
  NotMonic,
  UnsupportedField,
  ParseError,
  DimensionMismatch,
  Disconnected,
  Cyclic,
  NotEuclidean,
  NotFiniteOrder,
  VertexUnknown,
  ArrowUnknown,
  QuiverMismatch,
  NotIntertwining,
  NotSubrep,
  NotIrreducible,
  WrongQuiver,
  BadEpsilon,
  NotRegularIndecomposable,
  EpsilonMismatch,
  EpsilonUnachievable,
  InvalidInput,
  UnsupportedFunctor,
  NotSinkOrSource,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qamen
