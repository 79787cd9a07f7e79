#ifndef TROPCLUSTER_ERRORS_HPP
#define TROPCLUSTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropcluster {

enum class ErrorCode {
  SingularMatrix,
  FrozenDirection,
  AmbiguousMinimum,
  OracleMismatch,
  ZeroPolynomial,
  ResourceBudget,
  NotACone,
  NotBinomial,
  NotCertified,
  IndexClash,
  UnsupportedN,
  MissingWitness,
  NotHomogeneous,
  Parse,
  InvalidArgument,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropcluster

#endif  // TROPCLUSTER_ERRORS_HPP
