#pragma once

#include <cstdint>

namespace concise {

/// A 32-bit compressed word. Bit 31 set means literal (bits 0..30 hold one
/// 31-bit block, bit 0 being the smallest integer); bit 31 clear means fill.
///
/// CONCISE fill:  0 | type | 5-bit position | 25-bit (blocks - 1)
/// WAH fill:      0 | type | 30-bit blocks
///
/// A non-zero CONCISE position p flips bit p-1 of the first block of the
/// fill ("mixed" fill).
using word_type = std::uint32_t;

enum class format : std::uint8_t { concise, wah };

enum class word_kind : std::uint8_t { literal, zero_fill, one_fill };

inline constexpr unsigned block_bits = 31;
inline constexpr word_type literal_flag = 0x80000000u;
inline constexpr word_type all_zeros_literal = 0x80000000u;
inline constexpr word_type all_ones_literal = 0xFFFFFFFFu;
inline constexpr word_type fill_type_bit = 0x40000000u;
inline constexpr word_type payload_mask = 0x7FFFFFFFu;
inline constexpr word_type concise_count_mask = 0x01FFFFFFu;
inline constexpr word_type wah_count_mask = 0x3FFFFFFFu;
inline constexpr unsigned position_shift = 25;

/// Most blocks a single fill word can describe.
inline constexpr std::uint32_t concise_max_fill_blocks = 1u << 25;
inline constexpr std::uint32_t wah_max_fill_blocks = (1u << 30) - 1;

/// Largest integer a CONCISE set can hold: 31 * 2^25 + 30.
inline constexpr std::uint32_t concise_max_allowed
  = block_bits * (1u << 25) + (block_bits - 1);

constexpr bool is_literal(word_type w) noexcept {
  return (w & literal_flag) != 0;
}

constexpr bool is_fill(word_type w) noexcept {
  return !is_literal(w);
}

word_kind classify(word_type w, format fmt) noexcept;

/// Number of 31-bit blocks a fill word represents.
/// Throws `errc::not_a_fill` for literals.
std::uint32_t fill_blocks(word_type w, format fmt);

/// Position field of a CONCISE fill; 0 for a pure fill.
unsigned fill_position(word_type w);

/// The literal for the `block_index`-th block of fill `w`.
word_type expand_fill_block(word_type w, std::uint32_t block_index,
                            format fmt);

word_type make_fill(word_kind kind, std::uint32_t blocks, unsigned position,
                    format fmt);

/// Number of integers word `w` encodes.
std::uint64_t bit_count(word_type w, format fmt);

/// True for a literal whose payload has exactly one set bit.
bool contains_one_bit(word_type w) noexcept;

} // namespace concise
