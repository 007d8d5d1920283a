#include "concise/word.hpp"

#include "concise/error.hpp"

#include <bit>
#include <string>

namespace concise {

word_kind classify(word_type w, format) noexcept {
  if (is_literal(w))
    return word_kind::literal;
  return (w & fill_type_bit) != 0 ? word_kind::one_fill : word_kind::zero_fill;
}

std::uint32_t fill_blocks(word_type w, format fmt) {
  if (is_literal(w))
    throw error{errc::not_a_fill, "word is a literal"};
  if (fmt == format::concise)
    return (w & concise_count_mask) + 1;
  return w & wah_count_mask;
}

unsigned fill_position(word_type w) {
  if (is_literal(w))
    throw error{errc::not_a_fill, "word is a literal"};
  return (w >> position_shift) & 0x1Fu;
}

word_type expand_fill_block(word_type w, std::uint32_t block_index,
                            format fmt) {
  auto blocks = fill_blocks(w, fmt);
  if (block_index >= blocks)
    throw error{errc::block_index_out_of_range,
                std::to_string(block_index) + " >= " + std::to_string(blocks)};
  auto ones = (w & fill_type_bit) != 0;
  auto pure = ones ? all_ones_literal : all_zeros_literal;
  if (fmt == format::wah || block_index != 0)
    return pure;
  auto position = fill_position(w);
  if (position == 0)
    return pure;
  return pure ^ (word_type{1} << (position - 1));
}

word_type make_fill(word_kind kind, std::uint32_t blocks, unsigned position,
                    format fmt) {
  if (kind == word_kind::literal)
    throw error{errc::invalid_argument, "a literal is not a fill kind"};
  if (blocks == 0)
    throw error{errc::invalid_argument, "a fill covers at least one block"};
  word_type type = kind == word_kind::one_fill ? fill_type_bit : 0;
  if (fmt == format::wah) {
    if (position != 0)
      throw error{errc::invalid_argument, "WAH fills have no position bits"};
    if (blocks > wah_max_fill_blocks)
      throw error{errc::count_overflow,
                  std::to_string(blocks) + " blocks exceed the WAH count"};
    return type | blocks;
  }
  if (position > 31)
    throw error{errc::invalid_argument,
                "position " + std::to_string(position) + " > 31"};
  if (blocks > concise_max_fill_blocks)
    throw error{errc::count_overflow,
                std::to_string(blocks) + " blocks exceed the CONCISE count"};
  return type | (word_type{position} << position_shift) | (blocks - 1);
}

std::uint64_t bit_count(word_type w, format fmt) {
  if (is_literal(w))
    return std::popcount(w & payload_mask);
  auto first = std::popcount(expand_fill_block(w, 0, fmt) & payload_mask);
  if ((w & fill_type_bit) == 0)
    return first;
  return first + std::uint64_t{block_bits} * (fill_blocks(w, fmt) - 1);
}

bool contains_one_bit(word_type w) noexcept {
  return is_literal(w) && std::popcount(w & payload_mask) == 1;
}

} // namespace concise
