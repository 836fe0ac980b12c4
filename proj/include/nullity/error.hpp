#pragma once

#include <stdexcept>
#include <string>

namespace nullity {

enum class ErrorCode {
  parse = 1,
  invalid_argument = 2,
  cap_exceeded = 3,
  not_invertible = 4,
  domain = 5,  // operation does not apply to this instance (e.g. modular case)
  internal = 6,
  io = 7,
};

/// Every failure in the core surfaces as this exception; the C API maps
/// code() onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nullity
