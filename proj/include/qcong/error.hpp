#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcong {

enum class ErrorKind {
  NonMonicModulus,
  DenominatorNotCoprime,
  MismatchedModulus,
  TooLarge,
  PoleAtCyclotomic,
  DivergentProduct,
  NotSummableAsSeries,
  NonUnitConstant,
  UnknownPreset,
  SingularSpecialization,
  NotPAdicallyIntegral,
  OutOfDomain,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure carries a machine-readable kind; what() is
/// "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcong
