#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torusfill {

enum class ErrorKind {
  NotSL2,
  NotPrimitive,
  NotHyperbolicShape,
  IndexOutOfRange,
  NotParabolic,
  NotNegativeHyperbolic,
  OutOfRange,
  HypothesisFailed,
  UnsupportedLength,
  InvalidDescriptor,
  InvalidMove,
  Parse,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

/// All library failures surface as this exception; kind() identifies the
/// failed precondition so callers can branch without parsing what().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace torusfill
