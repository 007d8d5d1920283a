#pragma once

#include "concise/error.hpp"
#include "concise/set_op.hpp"
#include "concise/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace concise {

/// Encoding parameters for CONCISE words (mixed fills enabled).
struct concise_codec {
  static constexpr format fmt = format::concise;
  static constexpr bool mixed_fills = true;
  static constexpr std::uint32_t max_fill_blocks = concise_max_fill_blocks;
  static constexpr std::uint32_t max_allowed = concise_max_allowed;
  static constexpr std::string_view magic = "CNCS";
};

/// Encoding parameters for WAH words. The 30-bit count covers far more than
/// 32-bit integers, so the element type bounds the domain. FFFFFFFFh is
/// reserved as the serialized empty-set marker.
struct wah_codec {
  static constexpr format fmt = format::wah;
  static constexpr bool mixed_fills = false;
  static constexpr std::uint32_t max_fill_blocks = wah_max_fill_blocks;
  static constexpr std::uint32_t max_allowed = 0xFFFFFFFEu;
  static constexpr std::string_view magic = "WAHS";
};

/// Whether performing an operation may jump over runs of fill blocks that
/// both operands share. Disabling it walks every block one literal at a time.
enum class skip_mode : std::uint8_t { enabled, disabled };

/// Iterates the words of a compressed bitmap one 31-bit block at a time.
template <class Codec>
class word_cursor {
public:
  explicit word_cursor(std::span<const word_type> words) noexcept
    : words_{words} {
  }

  bool has_more() const noexcept {
    return word_index_ < words_.size();
  }

  std::span<const word_type> words() const noexcept {
    return words_;
  }

  std::size_t word_index() const noexcept {
    return word_index_;
  }

  /// Blocks already consumed within the current fill; 0 on a literal.
  std::uint32_t block_offset() const noexcept {
    return block_offset_;
  }

  /// Returns the next block as a literal and advances by one block.
  word_type next_literal() {
    auto w = current();
    if (is_literal(w)) {
      ++word_index_;
      return w;
    }
    auto literal = expand_fill_block(w, block_offset_, Codec::fmt);
    if (++block_offset_ == fill_blocks(w, Codec::fmt)) {
      ++word_index_;
      block_offset_ = 0;
    }
    return literal;
  }

  /// Pure blocks left in the current fill after the next one. Zero on a
  /// literal or before the first block of a fill has been consumed, so a
  /// skip never crosses into the following word.
  std::uint32_t remaining_fill_length() const noexcept {
    if (!has_more() || block_offset_ == 0)
      return 0;
    auto w = words_[word_index_];
    if (is_literal(w))
      return 0;
    return fill_blocks(w, Codec::fmt) - block_offset_ - 1;
  }

  /// Advances by `blocks` blocks, moving to later words as fills run out.
  void skip(std::uint64_t blocks) {
    while (blocks > 0) {
      auto w = current();
      if (is_literal(w)) {
        ++word_index_;
        --blocks;
        continue;
      }
      auto available = fill_blocks(w, Codec::fmt) - block_offset_;
      if (blocks < available) {
        block_offset_ += static_cast<std::uint32_t>(blocks);
        return;
      }
      blocks -= available;
      ++word_index_;
      block_offset_ = 0;
    }
  }

private:
  word_type current() const {
    if (!has_more())
      throw error{errc::cursor_exhausted, "no words left"};
    return words_[word_index_];
  }

  std::span<const word_type> words_;
  std::size_t word_index_ = 0;
  std::uint32_t block_offset_ = 0;
};

/// A compressed set of 32-bit integers backed by word-aligned run-length
/// encoded 31-bit blocks. `Codec` selects CONCISE or WAH words.
///
/// Sets are built by appending integers in strictly increasing order; every
/// other operation returns a new set.
///
/// Invariants maintained by every constructor:
///
/// 1. The last word contains the greatest element in its last block.
/// 2. No trailing word encodes only zeros.
/// 3. Homogeneous single blocks are stored as literals; a fill produced by
///    the encoder always spans at least two blocks.
template <class Codec>
class basic_set {
public:
  using codec = Codec;
  using value_type = std::uint32_t;

  static constexpr format fmt = Codec::fmt;
  static constexpr value_type max_allowed = Codec::max_allowed;

  basic_set() = default;

  /// Builds a set by appending each value of a strictly ascending sequence.
  static basic_set from_sorted(std::span<const value_type> values);

  /// Adopts an existing word array after validating it.
  /// Throws `errc::invalid_word` when the words break a set invariant.
  static basic_set from_words(std::vector<word_type> words);

  /// Merges the last word of `words` into the one before it when the last
  /// word is a homogeneous block that extends or completes a fill.
  static void compress(std::vector<word_type>& words);

  /// Inserts `i`, which must exceed every current element.
  void append(std::int64_t i);

  /// Returns this set plus `i`. Uses append when `i` exceeds the maximum
  /// and a union with a singleton otherwise.
  basic_set add(std::int64_t i) const;

  /// Returns this set minus `i`, as a difference with a singleton.
  basic_set remove(std::int64_t i) const;

  bool empty() const noexcept {
    return words_.empty();
  }

  std::span<const word_type> words() const noexcept {
    return words_;
  }

  std::size_t word_count() const noexcept {
    return words_.size();
  }

  std::optional<value_type> max() const noexcept {
    if (empty())
      return std::nullopt;
    return max_;
  }

  bool contains(std::int64_t i) const noexcept;

  std::uint64_t cardinality() const noexcept;

  /// All elements in ascending order.
  std::vector<value_type> decode() const;

  /// Layout: magic (4 bytes), version 01h, reserved 00h, word count (LE32),
  /// max (LE32, FFFFFFFFh when empty), then each word as LE32.
  std::vector<std::uint8_t> serialize() const;

  static basic_set deserialize(std::span<const std::uint8_t> bytes);

  static basic_set operate(const basic_set& a, const basic_set& b, set_op op,
                           skip_mode mode = skip_mode::enabled);

  friend bool operator==(const basic_set&, const basic_set&) = default;

private:
  void push_literal(word_type literal);
  void push_run(word_type pure, std::uint64_t blocks);
  void copy_tail(word_cursor<Codec>& cursor);
  void finish();

  std::vector<word_type> words_;
  value_type max_ = 0;
};

template <class Codec>
basic_set<Codec> perform_operation(const basic_set<Codec>& a,
                                   const basic_set<Codec>& b, set_op op,
                                   skip_mode mode = skip_mode::enabled) {
  return basic_set<Codec>::operate(a, b, op, mode);
}

using concise_set = basic_set<concise_codec>;
using wah_set = basic_set<wah_codec>;

extern template class basic_set<concise_codec>;
extern template class basic_set<wah_codec>;

} // namespace concise
