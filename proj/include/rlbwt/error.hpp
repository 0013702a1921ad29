#pragma once

#include <stdexcept>
#include <string>

namespace rlbwt {

enum class ErrorKind {
  kIo,
  kParse,
  kAlphabetFull,
  kAlphabetTooLarge,
  kOrderingMismatch,
  kTooLong,
  kMalformedBwt,
  kMalformedRle,
  kDivisionByZero,
  kIndexOutOfRange,
  kEmptyGroup,
  kInvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rlbwt
