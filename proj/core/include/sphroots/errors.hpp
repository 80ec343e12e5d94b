#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphroots {

enum class ErrorKind {
  InvalidInput,
  InvalidType,
  DimensionMismatch,
  NegativeCoefficient,
  UnrecognizedDiagram,
  NotARoot,
  EmptyFiber,
  NonUniqueExtreme,
  PsiNotInPhiPlus,
  ClosureViolation,
  NoMaximalWeight,
  LambdaNotActive,
  InvariantViolation,
  AmbiguousComponent,
  ParamsOutOfRange,
  UnclassifiedLeaf,
  NotSpherical,
  ExceededIterations,
  UnclassifiedCase,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sphroots
