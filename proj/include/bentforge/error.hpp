#pragma once

#include <stdexcept>
#include <string>

namespace bentforge {

enum class ErrorCode {
  LengthMismatch,
  NTooLarge,
  IndexOutOfRange,
  SingularMatrix,
  ZeroDirection,
  NotBooleanSpectrum,
  DimensionMismatch,
  NotBent,
  NotPlateaued,
  TooLarge,
  CandidateSpaceTooLarge,
  SpaceTooLarge,
  OddN,
  BadInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace bentforge
