#include "btw/errors.hpp"

namespace btw {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::invalid_id: return "invalid_id";
    case ErrorCode::not_bijective: return "not_bijective";
    case ErrorCode::size_mismatch: return "size_mismatch";
    case ErrorCode::degenerate_input: return "degenerate_input";
    case ErrorCode::off_set: return "off_set";
    case ErrorCode::ratio_mismatch: return "ratio_mismatch";
    case ErrorCode::search_limit: return "search_limit";
    case ErrorCode::invariant_violation: return "invariant_violation";
    case ErrorCode::accidental_incidence: return "accidental_incidence";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::schema_error: return "schema_error";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace btw
