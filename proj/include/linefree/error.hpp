#pragma once

#include <stdexcept>
#include <string>

namespace linefree {

enum class ErrorKind {
  NotPrime,
  ModulusTooSmall,  // n == 2
  BelowTwo,         // n < 2
  OutOfRange,
  DimensionMismatch,
  ZeroInverse,
  Io,
  Format,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace linefree
