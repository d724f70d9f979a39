#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmetric {

enum class ErrorCode {
  kSelfLoop,
  kDisconnected,
  kIndexOutOfRange,
  kEmptyGraph,
  kSamePair,
  kSizeLimitExceeded,
  kEmptyList,
  kBadRootSet,
  kOutOfRange,
  kParse,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kSamePair: return "SamePair";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kEmptyList: return "EmptyList";
    case ErrorCode::kBadRootSet: return "BadRootSet";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kmetric
