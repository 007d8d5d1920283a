#include "concise/plain_set.hpp"

#include "concise/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace concise {

plain_set::plain_set(std::vector<value_type> elements, bool with_bitmap)
  : elements_{std::move(elements)} {
  for (std::size_t i = 1; i < elements_.size(); ++i)
    if (elements_[i - 1] >= elements_[i])
      throw error{errc::unsorted_input,
                  "element " + std::to_string(i) + " is not ascending"};
  if (with_bitmap)
    bitmap_ = bitmap_from_list(elements_);
}

bool plain_set::contains(value_type i) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

std::vector<std::uint32_t> list_op(std::span<const std::uint32_t> a,
                                   std::span<const std::uint32_t> b,
                                   set_op op) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  std::size_t j = 0;
  auto keep_a_only = op != set_op::and_;
  auto keep_b_only = op == set_op::or_ || op == set_op::xor_;
  auto keep_both = op == set_op::and_ || op == set_op::or_;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      if (keep_a_only)
        out.push_back(a[i]);
      ++i;
    } else if (i == a.size() || b[j] < a[i]) {
      if (keep_b_only)
        out.push_back(b[j]);
      ++j;
    } else {
      if (keep_both)
        out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<std::uint32_t> bitmap_op(std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b,
                                     set_op op) {
  std::vector<std::uint32_t> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::uint32_t x = k < a.size() ? a[k] : 0;
    std::uint32_t y = k < b.size() ? b[k] : 0;
    switch (op) {
      case set_op::and_:
        out[k] = x & y;
        break;
      case set_op::or_:
        out[k] = x | y;
        break;
      case set_op::xor_:
        out[k] = x ^ y;
        break;
      case set_op::andnot:
        out[k] = x & ~y;
        break;
    }
  }
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

std::vector<std::uint32_t> bitmap_from_list(std::span<const std::uint32_t> xs) {
  if (xs.empty())
    return {};
  std::vector<std::uint32_t> out(std::size_t{xs.back()} / 32 + 1);
  for (auto x : xs)
    out[x / 32] |= std::uint32_t{1} << (x % 32);
  return out;
}

std::vector<std::uint32_t> list_from_bitmap(std::span<const std::uint32_t> bm) {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < bm.size(); ++k)
    for (std::uint32_t bit = 0; bit < 32; ++bit)
      if ((bm[k] >> bit) & 1u)
        out.push_back(static_cast<std::uint32_t>(k * 32 + bit));
  return out;
}

plain_set plain_op(const plain_set& a, const plain_set& b, set_op op) {
  auto list = list_op(a.elements(), b.elements(), op);
  if (!a.has_bitmap() || !b.has_bitmap())
    return plain_set{std::move(list)};
  auto bits = bitmap_op(*a.bitmap(), *b.bitmap(), op);
  if (list_from_bitmap(bits) != list)
    throw std::logic_error{"plain_op: list and bitmap paths disagree for "
                           + std::string{to_string(op)}};
  return plain_set{std::move(list), true};
}

std::size_t plain_bitmap_words(const plain_set& p) noexcept {
  if (p.elements().empty())
    return 0;
  return (std::size_t{p.elements().back()} + 1 + 31) / 32;
}

std::size_t plain_array_words(const plain_set& p) noexcept {
  return p.cardinality();
}

} // namespace concise
