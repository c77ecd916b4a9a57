#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cascade {

enum class ErrorCode {
  InvalidArgument,
  EmptyCorpus,
  EmptyInput,
  MissingGold,
  UnknownLabel,
  UnknownAgent,
  LengthMismatch,
  Transport,
  Protocol,
  Io,
  Malformed,
  Config,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and meant for
/// programmatic handling; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  /// Malformed-input errors carry the 1-based line (or record) number.
  Error(ErrorCode code, std::size_t line, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace cascade
