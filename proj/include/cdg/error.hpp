#ifndef CDG_ERROR_HPP
#define CDG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cdg {

enum class ErrorCode {
  MalformedInput,
  NonPrimeLabel,
  SelfLoop,
  UnknownEndpoint,
  UnknownVertex,
  TooLarge,
  NotDiameterThree,
  BadBaseVertex,
  StructureViolation,
  InconsistentWitness,
  LabelCollision,
  EvenP,
  PoolExhausted,
  BadN,
  InternalCheckFailed,
  UnknownFilter,
};

const char* error_code_name(ErrorCode code);

/// All toolkit failures are reported through this exception; the code tells
/// callers (and exit-code mapping in the CLI) what went wrong.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace cdg

#endif  // CDG_ERROR_HPP
