#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topomani {

enum class ErrorCode {
  kEmptyInput,
  kWrongFaceArity,
  kFaceNotPresent,
  kUnsupportedDimension,
  kNotAManifold,
  kParityViolation,
  kInvalidMove,
  kNotMaximal,
  kInvalidParameter,
  kIsolatedNode,
  kEmptyTrain,
  kParseError,
  kValidationError,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace topomani
