#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wlab {

enum class ErrorCode {
  CompositeModulusBase,
  ExponentOutOfRange,
  NotInvertible,
  RingMismatch,
  CapExceeded,
  IndexDivisible,
  KummerInapplicable,
  PrecisionUnderflow,
  InvalidInput,
  InternalInconsistency,
  NotWolstenholme,
  UnknownCheckName,
  CheckpointCorrupt,
  TaskMismatch,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by batch inversion; remembers the first element that shares a factor with p.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(std::size_t index, const std::string& what)
      : Error(ErrorCode::NotInvertible, what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace wlab
