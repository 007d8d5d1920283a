#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace concise {

enum class errc {
  out_of_range,
  not_greater,
  not_a_fill,
  block_index_out_of_range,
  count_overflow,
  invalid_argument,
  unsorted_input,
  cursor_exhausted,
  malformed_header,
  invalid_word,
  truncated_input,
  infeasible_spec,
};

std::string_view to_string(errc code) noexcept;

/// The single exception type thrown by the library. Callers that need to
/// distinguish failure modes switch on `code()`.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
    : std::runtime_error(std::string{to_string(code)} + ": " + what),
      code_{code} {
  }

  errc code() const noexcept {
    return code_;
  }

private:
  errc code_;
};

} // namespace concise
