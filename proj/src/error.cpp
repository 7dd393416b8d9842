#include "qcong/error.hpp"

namespace qcong {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonMonicModulus: return "NonMonicModulus";
    case ErrorKind::DenominatorNotCoprime: return "DenominatorNotCoprime";
    case ErrorKind::MismatchedModulus: return "MismatchedModulus";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PoleAtCyclotomic: return "PoleAtCyclotomic";
    case ErrorKind::DivergentProduct: return "DivergentProduct";
    case ErrorKind::NotSummableAsSeries: return "NotSummableAsSeries";
    case ErrorKind::NonUnitConstant: return "NonUnitConstant";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::SingularSpecialization: return "SingularSpecialization";
    case ErrorKind::NotPAdicallyIntegral: return "NotPAdicallyIntegral";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace qcong
