#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace btw {

/// Machine-readable failure categories. The CLI reports these verbatim.
enum class ErrorCode {
  invalid_argument,
  invalid_id,
  not_bijective,
  size_mismatch,
  degenerate_input,
  off_set,
  ratio_mismatch,
  search_limit,
  invariant_violation,
  accidental_incidence,
  parse_error,
  schema_error,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace btw
