#pragma once

#include <stdexcept>
#include <string>

namespace repdescent {

/// Failure categories surfaced by the engine. Values are stable: the C API
/// returns them as integer codes.
enum class ErrorCode : int {
  invalid_argument = 1,
  order_mismatch = 2,
  dimension_mismatch = 3,
  not_a_group = 4,
  no_valid_lift = 5,
  bound_exceeded = 6,
  not_scalar = 7,
  not_normal = 8,
  schema = 9,
  corrupt = 10,
  io = 11,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace repdescent
