#include "sphroots/errors.hpp"

namespace sphroots {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::UnrecognizedDiagram: return "UnrecognizedDiagram";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::EmptyFiber: return "EmptyFiber";
    case ErrorKind::NonUniqueExtreme: return "NonUniqueExtreme";
    case ErrorKind::PsiNotInPhiPlus: return "PsiNotInPhiPlus";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::NoMaximalWeight: return "NoMaximalWeight";
    case ErrorKind::LambdaNotActive: return "LambdaNotActive";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::AmbiguousComponent: return "AmbiguousComponent";
    case ErrorKind::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorKind::UnclassifiedLeaf: return "UnclassifiedLeaf";
    case ErrorKind::NotSpherical: return "NotSpherical";
    case ErrorKind::ExceededIterations: return "ExceededIterations";
    case ErrorKind::UnclassifiedCase: return "UnclassifiedCase";
  }
  return "Error";
}

}  // namespace sphroots
