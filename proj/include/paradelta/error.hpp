#ifndef PARADELTA_ERROR_HPP
#define PARADELTA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace paradelta {

enum class ErrorCode {
  InvalidArgument,
  VariableMismatch,
  NotDivisible,
  NonIntegralInterpolant,
  InconsistentResidues,
  NotAPerfectPower,
  NotIn4cRing,
  DegreeBoundViolated,
  UnsupportedPeriod,
  PInvalidDividesK,
  ConvergenceFailure,
  PathTooCoarse,
  RootOnPath,
  CacheCorrupt,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// the C layer can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace paradelta

#endif  // PARADELTA_ERROR_HPP
