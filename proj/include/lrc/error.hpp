#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrc {

enum class ErrorKind {
  UnsupportedOrder,
  SizeCap,
  OutOfRange,
  WrongField,
  GeometryMismatch,
  EmptyMultiset,
  NotSpanning,
  RaggedRows,
  BadSymbol,
  DegenerateCode,
  DimensionCollapse,
  InconsistentInput,
  PreconditionFailed,
  EvenDistance,
  NotProjective,
  NoPlacement,
  InfeasibleType,
  SmallK,
  BadR,
  BadK,
  BadLambda,
  EmptyInput,
  UnknownConstruction,
  ParseError,
  DataCorrupt,
  Timeout,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` lets callers
// map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lrc
