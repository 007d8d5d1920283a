#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace concise {

/// Binary set operations. `andnot` is left \ right.
enum class set_op : std::uint8_t { and_, or_, xor_, andnot };

inline constexpr set_op all_set_ops[] = {set_op::and_, set_op::or_,
                                         set_op::xor_, set_op::andnot};

constexpr std::string_view to_string(set_op op) noexcept {
  switch (op) {
    case set_op::and_:
      return "and";
    case set_op::or_:
      return "or";
    case set_op::xor_:
      return "xor";
    case set_op::andnot:
      return "andnot";
  }
  return "?";
}

constexpr std::optional<set_op> parse_set_op(std::string_view name) noexcept {
  for (auto op : all_set_ops)
    if (to_string(op) == name)
      return op;
  return std::nullopt;
}

} // namespace concise
