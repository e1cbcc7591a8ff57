#pragma once

#include <stdexcept>
#include <string>

namespace beadcalc {

enum class ErrorKind {
  BadValence,
  IncompleteCyclicOrder,
  DuplicateLegLabel,
  Malformed,
  CapExceeded,
  DegreeMismatch,
  NotInF3,
  NotTrivalent,
  NonzeroBeadDegree,
  NotDivisible,
  WrongDegree,
  TruncationTooSmall,
};

const char* error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace beadcalc
