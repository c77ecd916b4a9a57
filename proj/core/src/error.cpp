#include "cascade/error.hpp"

namespace cascade {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MissingGold: return "MissingGold";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::UnknownAgent: return "UnknownAgent";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::Transport: return "Transport";
    case ErrorCode::Protocol: return "Protocol";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

Error::Error(ErrorCode code, std::size_t line, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + " (line " + std::to_string(line) +
                         "): " + message),
      code_(code),
      line_(line) {}

}  // namespace cascade
