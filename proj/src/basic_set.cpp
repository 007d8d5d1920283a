#include "concise/basic_set.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>

namespace concise {

namespace {

constexpr std::uint8_t serial_version = 0x01;
constexpr std::size_t header_size = 14;
constexpr std::uint32_t empty_max_marker = 0xFFFFFFFFu;

bool is_one_fill(word_type w) noexcept {
  return is_fill(w) && (w & fill_type_bit) != 0;
}

bool is_zero_fill(word_type w) noexcept {
  return is_fill(w) && (w & fill_type_bit) == 0;
}

word_type pure_literal_of(word_type fill) noexcept {
  return is_one_fill(fill) ? all_ones_literal : all_zeros_literal;
}

template <class Codec>
std::uint32_t blocks_of(word_type w) {
  return is_literal(w) ? 1 : fill_blocks(w, Codec::fmt);
}

word_type combine(set_op op, word_type a, word_type b) noexcept {
  switch (op) {
    case set_op::and_:
      return a & b;
    case set_op::or_:
      return a | b;
    case set_op::xor_:
      return literal_flag | (a ^ b);
    case set_op::andnot:
      return literal_flag | (a & ~b);
  }
  return all_zeros_literal;
}

/// Greatest integer encoded by `words`, or nullopt when the last block is
/// empty or the value lies outside the 32-bit domain.
template <class Codec>
std::optional<std::uint64_t> last_value(std::span<const word_type> words) {
  if (words.empty())
    return std::nullopt;
  std::uint64_t blocks = 0;
  for (auto w : words.first(words.size() - 1))
    blocks += blocks_of<Codec>(w);
  auto last = words.back();
  auto n = blocks_of<Codec>(last);
  auto literal = is_literal(last) ? last : expand_fill_block(last, n - 1,
                                                            Codec::fmt);
  auto payload = literal & payload_mask;
  if (payload == 0)
    return std::nullopt;
  auto top_bit = 31u - static_cast<unsigned>(std::countl_zero(payload));
  return (blocks + n - 1) * block_bits + top_bit;
}

void put_le32(std::vector<std::uint8_t>& out, std::uint32_t x) {
  for (int shift = 0; shift < 32; shift += 8)
    out.push_back(static_cast<std::uint8_t>(x >> shift));
}

std::uint32_t get_le32(std::span<const std::uint8_t> in) {
  return std::uint32_t{in[0]} | std::uint32_t{in[1]} << 8
         | std::uint32_t{in[2]} << 16 | std::uint32_t{in[3]} << 24;
}

} // namespace

template <class Codec>
void basic_set<Codec>::compress(std::vector<word_type>& words) {
  if (words.size() < 2)
    return;
  auto last = words.back();
  auto zeros = last == all_zeros_literal;
  auto ones = last == all_ones_literal;
  if (!zeros && !ones)
    return;
  auto& prev = words[words.size() - 2];
  if (is_fill(prev)) {
    // Same-type fills absorb the block; opposite-type fills stay apart.
    if (is_one_fill(prev) == ones
        && fill_blocks(prev, Codec::fmt) < Codec::max_fill_blocks) {
      words.pop_back();
      ++words.back();
    }
    return;
  }
  auto w = ones ? ~prev : prev & payload_mask;
  auto kind = ones ? word_kind::one_fill : word_kind::zero_fill;
  if (w == 0) {
    words.pop_back();
    words.back() = make_fill(kind, 2, 0, Codec::fmt);
  } else if (Codec::mixed_fills && std::popcount(w) == 1) {
    auto position = 1u + static_cast<unsigned>(std::countr_zero(w));
    words.pop_back();
    words.back() = make_fill(kind, 2, position, Codec::fmt);
  }
}

template <class Codec>
void basic_set<Codec>::append(std::int64_t i) {
  if (i < 0 || i > std::int64_t{max_allowed})
    throw error{errc::out_of_range,
                std::to_string(i) + " outside [0, "
                  + std::to_string(max_allowed) + "]"};
  auto value = static_cast<value_type>(i);
  if (words_.empty()) {
    auto leading = value / block_bits;
    if (leading == 1)
      words_.push_back(all_zeros_literal);
    else if (leading >= 2)
      words_.push_back(make_fill(word_kind::zero_fill, leading, 0, Codec::fmt));
    words_.push_back(literal_flag | word_type{1} << (value % block_bits));
    max_ = value;
    return;
  }
  if (value <= max_)
    throw error{errc::not_greater, std::to_string(i)
                                     + " <= " + std::to_string(max_)};
  // Offset of the new bit from the start of the block holding max_.
  std::uint64_t b = std::uint64_t{value} - max_ + max_ % block_bits;
  if (b >= block_bits) {
    auto gap = static_cast<std::uint32_t>(b / block_bits - 1);
    if (gap > 0) {
      auto& last = words_.back();
      if (Codec::mixed_fills && contains_one_bit(last)) {
        auto position = 1u + static_cast<unsigned>(
                          std::countr_zero(last & payload_mask));
        last = make_fill(word_kind::zero_fill, gap + 1, position, Codec::fmt);
      } else if (gap == 1) {
        words_.push_back(all_zeros_literal);
      } else {
        words_.push_back(make_fill(word_kind::zero_fill, gap, 0, Codec::fmt));
      }
    }
    words_.push_back(literal_flag);
    b %= block_bits;
  } else if (is_fill(words_.back())) {
    // Only reachable for single-block fills adopted through from_words.
    words_.back() = expand_fill_block(words_.back(), 0, Codec::fmt);
  }
  words_.back() |= word_type{1} << b;
  max_ = value;
  compress(words_);
}

template <class Codec>
basic_set<Codec>
basic_set<Codec>::from_sorted(std::span<const value_type> values) {
  basic_set result;
  for (auto v : values) {
    if (!result.empty() && v <= result.max_)
      throw error{errc::unsorted_input,
                  std::to_string(v) + " follows " + std::to_string(result.max_)};
    result.append(v);
  }
  return result;
}

template <class Codec>
basic_set<Codec> basic_set<Codec>::from_words(std::vector<word_type> words) {
  basic_set result;
  if (words.empty())
    return result;
  std::uint64_t blocks = 0;
  constexpr std::uint64_t max_blocks = std::uint64_t{max_allowed} / block_bits
                                       + 1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto w = words[i];
    if (is_fill(w) && Codec::fmt == format::wah && (w & wah_count_mask) == 0)
      throw error{errc::invalid_word,
                  "WAH fill with zero blocks at word " + std::to_string(i)};
    if (i > 0 && is_fill(w) && is_fill(words[i - 1])
        && is_one_fill(w) == is_one_fill(words[i - 1])
        && (Codec::fmt == format::wah || fill_position(w) == 0))
      throw error{errc::invalid_word,
                  "unmerged consecutive fills at word " + std::to_string(i)};
    blocks += blocks_of<Codec>(w);
  }
  if (blocks > max_blocks)
    throw error{errc::invalid_word, std::to_string(blocks) + " blocks exceed "
                                      + std::to_string(max_blocks)};
  auto max = last_value<Codec>(words);
  if (!max)
    throw error{errc::invalid_word, "last block holds no element"};
  if (*max > max_allowed)
    throw error{errc::invalid_word,
                "greatest element " + std::to_string(*max) + " out of range"};
  result.words_ = std::move(words);
  result.max_ = static_cast<value_type>(*max);
  return result;
}

template <class Codec>
basic_set<Codec> basic_set<Codec>::add(std::int64_t i) const {
  if (i < 0 || i > std::int64_t{max_allowed})
    throw error{errc::out_of_range, std::to_string(i)};
  if (empty() || i > std::int64_t{max_}) {
    auto result = *this;
    result.append(i);
    return result;
  }
  basic_set singleton;
  singleton.append(i);
  return operate(*this, singleton, set_op::or_);
}

template <class Codec>
basic_set<Codec> basic_set<Codec>::remove(std::int64_t i) const {
  if (i < 0 || i > std::int64_t{max_allowed})
    throw error{errc::out_of_range, std::to_string(i)};
  basic_set singleton;
  singleton.append(i);
  return operate(*this, singleton, set_op::andnot);
}

template <class Codec>
bool basic_set<Codec>::contains(std::int64_t i) const noexcept {
  if (i < 0 || empty() || i > std::int64_t{max_})
    return false;
  auto block = static_cast<std::uint64_t>(i) / block_bits;
  auto bit = static_cast<unsigned>(i % block_bits);
  std::uint64_t base = 0;
  for (auto w : words_) {
    auto n = blocks_of<Codec>(w);
    if (block < base + n) {
      auto literal = is_literal(w)
                       ? w
                       : expand_fill_block(
                         w, static_cast<std::uint32_t>(block - base),
                         Codec::fmt);
      return ((literal >> bit) & 1u) != 0;
    }
    base += n;
  }
  return false;
}

template <class Codec>
std::uint64_t basic_set<Codec>::cardinality() const noexcept {
  std::uint64_t result = 0;
  for (auto w : words_)
    result += bit_count(w, Codec::fmt);
  return result;
}

template <class Codec>
std::vector<typename basic_set<Codec>::value_type>
basic_set<Codec>::decode() const {
  std::vector<value_type> result;
  result.reserve(cardinality());
  std::uint64_t block = 0;
  auto emit = [&](word_type literal, std::uint64_t at) {
    auto payload = literal & payload_mask;
    auto first = static_cast<value_type>(at * block_bits);
    while (payload != 0) {
      result.push_back(first + static_cast<value_type>(
                                 std::countr_zero(payload)));
      payload &= payload - 1;
    }
  };
  for (auto w : words_) {
    if (is_literal(w)) {
      emit(w, block++);
      continue;
    }
    auto n = fill_blocks(w, Codec::fmt);
    emit(expand_fill_block(w, 0, Codec::fmt), block);
    if (is_one_fill(w)) {
      auto first = static_cast<value_type>((block + 1) * block_bits);
      auto count = static_cast<value_type>((n - 1) * block_bits);
      for (value_type k = 0; k < count; ++k)
        result.push_back(first + k);
    }
    block += n;
  }
  return result;
}

template <class Codec>
std::vector<std::uint8_t> basic_set<Codec>::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(header_size + 4 * words_.size());
  out.insert(out.end(), Codec::magic.begin(), Codec::magic.end());
  out.push_back(serial_version);
  out.push_back(0);
  put_le32(out, static_cast<std::uint32_t>(words_.size()));
  put_le32(out, empty() ? empty_max_marker : max_);
  for (auto w : words_)
    put_le32(out, w);
  return out;
}

template <class Codec>
basic_set<Codec>
basic_set<Codec>::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < header_size)
    throw error{errc::truncated_input,
                "header needs " + std::to_string(header_size) + " bytes, got "
                  + std::to_string(bytes.size())};
  if (std::memcmp(bytes.data(), Codec::magic.data(), 4) != 0)
    throw error{errc::malformed_header, "bad magic"};
  if (bytes[4] != serial_version)
    throw error{errc::malformed_header,
                "unsupported version " + std::to_string(bytes[4])};
  if (bytes[5] != 0)
    throw error{errc::malformed_header, "reserved byte is not zero"};
  auto count = get_le32(bytes.subspan(6));
  auto max = get_le32(bytes.subspan(10));
  auto payload = bytes.subspan(header_size);
  if (payload.size() / 4 < count)
    throw error{errc::truncated_input,
                std::to_string(count) + " words announced, "
                  + std::to_string(payload.size() / 4) + " present"};
  if (payload.size() != std::size_t{count} * 4)
    throw error{errc::malformed_header, "trailing bytes after last word"};
  if (count == 0 && max != empty_max_marker)
    throw error{errc::malformed_header, "empty set with a maximum"};
  std::vector<word_type> words(count);
  for (std::uint32_t i = 0; i < count; ++i)
    words[i] = get_le32(payload.subspan(std::size_t{i} * 4));
  auto result = from_words(std::move(words));
  if (!result.empty() && result.max_ != max)
    throw error{errc::invalid_word, "header max " + std::to_string(max)
                                      + " disagrees with words ("
                                      + std::to_string(result.max_) + ")"};
  return result;
}

template <class Codec>
void basic_set<Codec>::push_literal(word_type literal) {
  words_.push_back(literal);
  compress(words_);
}

template <class Codec>
void basic_set<Codec>::push_run(word_type pure, std::uint64_t blocks) {
  auto ones = pure == all_ones_literal;
  while (blocks > 0) {
    if (!words_.empty()) {
      auto& last = words_.back();
      if (is_fill(last) && is_one_fill(last) == ones) {
        auto room = Codec::max_fill_blocks - fill_blocks(last, Codec::fmt);
        if (room > 0) {
          auto take = std::min<std::uint64_t>(room, blocks);
          last += static_cast<word_type>(take);
          blocks -= take;
          continue;
        }
      }
    }
    push_literal(pure);
    --blocks;
  }
}

template <class Codec>
void basic_set<Codec>::copy_tail(word_cursor<Codec>& cursor) {
  auto words = cursor.words();
  while (cursor.has_more()) {
    auto w = words[cursor.word_index()];
    if (is_literal(w)) {
      push_literal(w);
      cursor.skip(1);
      continue;
    }
    auto offset = cursor.block_offset();
    std::uint64_t left = fill_blocks(w, Codec::fmt) - offset;
    cursor.skip(left);
    if (offset == 0) {
      push_literal(expand_fill_block(w, 0, Codec::fmt));
      --left;
    }
    push_run(pure_literal_of(w), left);
  }
}

template <class Codec>
void basic_set<Codec>::finish() {
  while (!words_.empty()) {
    auto w = words_.back();
    if (w == all_zeros_literal) {
      words_.pop_back();
      continue;
    }
    if (is_zero_fill(w)) {
      auto first = expand_fill_block(w, 0, Codec::fmt);
      words_.pop_back();
      if (first != all_zeros_literal) {
        push_literal(first);
        break;
      }
      continue;
    }
    break;
  }
  auto max = last_value<Codec>(words_);
  max_ = max ? static_cast<value_type>(*max) : 0;
}

template <class Codec>
basic_set<Codec> basic_set<Codec>::operate(const basic_set& a,
                                           const basic_set& b, set_op op,
                                           skip_mode mode) {
  basic_set result;
  word_cursor<Codec> left{a.words_};
  word_cursor<Codec> right{b.words_};
  while (left.has_more() && right.has_more()) {
    result.push_literal(combine(op, left.next_literal(), right.next_literal()));
    if (mode == skip_mode::disabled || is_literal(result.words_.back()))
      continue;
    // The block just written merged into a fill; shared pure runs on both
    // sides produce the same block again, so extend the fill in one step.
    std::uint64_t shared = std::min(left.remaining_fill_length(),
                                    right.remaining_fill_length());
    if (shared == 0)
      continue;
    auto& fill = result.words_.back();
    shared = std::min<std::uint64_t>(
      shared, Codec::max_fill_blocks - fill_blocks(fill, Codec::fmt));
    left.skip(shared);
    right.skip(shared);
    fill += static_cast<word_type>(shared);
  }
  switch (op) {
    case set_op::or_:
    case set_op::xor_:
      result.copy_tail(left.has_more() ? left : right);
      break;
    case set_op::andnot:
      result.copy_tail(left);
      break;
    case set_op::and_:
      break;
  }
  result.finish();
  return result;
}

template class basic_set<concise_codec>;
template class basic_set<wah_codec>;

} // namespace concise
