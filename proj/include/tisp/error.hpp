#pragma once

#include <stdexcept>
#include <string>

namespace tisp {

enum class ErrorCode {
  EmptySequence,
  DuplicateTimestamp,
  NegativeTimestamp,
  InvalidValue,
  WrongOrientation,
  EmptyResult,
  TargetAbsent,
  InstanceTooLarge,
  ParseError,
  ValidationError,
  IoError,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; the code tells callers (and the CLI
// exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tisp
