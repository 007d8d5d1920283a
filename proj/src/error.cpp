#include "concise/error.hpp"

namespace concise {

std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::out_of_range:
      return "out of range";
    case errc::not_greater:
      return "not greater";
    case errc::not_a_fill:
      return "not a fill";
    case errc::block_index_out_of_range:
      return "block index out of range";
    case errc::count_overflow:
      return "count overflow";
    case errc::invalid_argument:
      return "invalid argument";
    case errc::unsorted_input:
      return "unsorted input";
    case errc::cursor_exhausted:
      return "cursor exhausted";
    case errc::malformed_header:
      return "malformed header";
    case errc::invalid_word:
      return "invalid word";
    case errc::truncated_input:
      return "truncated input";
    case errc::infeasible_spec:
      return "infeasible spec";
  }
  return "unknown error";
}

} // namespace concise
