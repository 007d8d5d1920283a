#pragma once

#include "concise/set_op.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace concise {

/// Uncompressed ground truth: a sorted list of distinct integers and,
/// optionally, a plain bit array with bit i of word i/32 set for member i.
///
/// Deliberately shares no code with the compressed encodings.
class plain_set {
public:
  using value_type = std::uint32_t;

  plain_set() = default;

  /// Throws `errc::unsorted_input` unless `elements` is strictly ascending.
  explicit plain_set(std::vector<value_type> elements,
                     bool with_bitmap = false);

  const std::vector<value_type>& elements() const noexcept {
    return elements_;
  }

  const std::optional<std::vector<std::uint32_t>>& bitmap() const noexcept {
    return bitmap_;
  }

  bool has_bitmap() const noexcept {
    return bitmap_.has_value();
  }

  std::size_t cardinality() const noexcept {
    return elements_.size();
  }

  bool contains(value_type i) const noexcept;

  friend bool operator==(const plain_set& x, const plain_set& y) noexcept {
    return x.elements_ == y.elements_;
  }

private:
  std::vector<value_type> elements_;
  std::optional<std::vector<std::uint32_t>> bitmap_;
};

/// Merge-walk over the sorted lists.
std::vector<std::uint32_t> list_op(std::span<const std::uint32_t> a,
                                   std::span<const std::uint32_t> b,
                                   set_op op);

/// Word-wise operation over plain bit arrays. The result is trimmed of
/// trailing zero words.
std::vector<std::uint32_t> bitmap_op(std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b,
                                     set_op op);

std::vector<std::uint32_t> bitmap_from_list(std::span<const std::uint32_t> xs);

std::vector<std::uint32_t> list_from_bitmap(std::span<const std::uint32_t> bm);

/// Exact set operation. When both operands carry bitmaps the result is
/// computed along both paths and the two must agree (std::logic_error
/// otherwise); the result carries a bitmap in that case.
plain_set plain_op(const plain_set& a, const plain_set& b, set_op op);

/// ceil((max + 1) / 32) words; 0 for the empty set.
std::size_t plain_bitmap_words(const plain_set& p) noexcept;

/// One word per element.
std::size_t plain_array_words(const plain_set& p) noexcept;

} // namespace concise
