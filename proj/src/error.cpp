#include "rlbwt/error.hpp"

namespace rlbwt {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kAlphabetFull: return "AlphabetFull";
    case ErrorKind::kAlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorKind::kOrderingMismatch: return "OrderingMismatch";
    case ErrorKind::kTooLong: return "TooLong";
    case ErrorKind::kMalformedBwt: return "MalformedBwt";
    case ErrorKind::kMalformedRle: return "MalformedRle";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kEmptyGroup: return "EmptyGroup";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace rlbwt
