#include "topomani/error.hpp"

namespace topomani {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kWrongFaceArity: return "WrongFaceArity";
    case ErrorCode::kFaceNotPresent: return "FaceNotPresent";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kNotAManifold: return "NotAManifold";
    case ErrorCode::kParityViolation: return "ParityViolation";
    case ErrorCode::kInvalidMove: return "InvalidMove";
    case ErrorCode::kNotMaximal: return "NotMaximal";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kIsolatedNode: return "IsolatedNode";
    case ErrorCode::kEmptyTrain: return "EmptyTrain";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace topomani
