#pragma once

// Test-only oracles. Nothing here includes the codec headers: raw words are
// unpacked and packed with local bit arithmetic so the checks stay
// independent of the implementation they verify.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <random>
#include <vector>

namespace oracle {

enum class encoding { concise, wah };

/// Bit-by-bit expansion of a word array into its ascending elements.
inline std::vector<std::uint32_t> expand(const std::vector<std::uint32_t>& words,
                                         encoding enc) {
  std::vector<std::uint32_t> out;
  std::uint64_t base = 0;
  for (auto w : words) {
    if (w >> 31) {
      for (unsigned bit = 0; bit < 31; ++bit)
        if ((w >> bit) & 1u)
          out.push_back(static_cast<std::uint32_t>(base + bit));
      base += 31;
      continue;
    }
    bool ones = (w >> 30) & 1u;
    unsigned position = 0;
    std::uint64_t blocks = 0;
    if (enc == encoding::concise) {
      position = (w >> 25) & 31u;
      blocks = (w & 0x1FFFFFFu) + 1;
    } else {
      blocks = w & 0x3FFFFFFFu;
    }
    for (std::uint64_t k = 0; k < blocks; ++k) {
      // Blocks of a 0-fill past the first hold no bits.
      if (!ones && k > 0)
        break;
      for (unsigned bit = 0; bit < 31; ++bit) {
        bool set = ones;
        if (k == 0 && position != 0 && bit == position - 1)
          set = !set;
        if (set)
          out.push_back(static_cast<std::uint32_t>(base + k * 31 + bit));
      }
    }
    base += 31 * blocks;
  }
  return out;
}

/// Encodes ascending elements block by block into the word array that
/// appending them one at a time must produce.
///
/// Rules, per maximal run of empty blocks between two occupied blocks:
/// - the run is folded into the previous word when that word is a literal
///   with one set bit (CONCISE only, a mixed 0-fill of run + 1 blocks);
/// - otherwise a single empty block stays an all-zeros literal and longer
///   runs become a pure 0-fill.
/// Leading empty blocks follow the same literal/fill split. A full block
/// joins a preceding 1-fill, or a preceding literal that is full or, for
/// CONCISE, full but one bit. The first occupied block never merges.
inline std::vector<std::uint32_t> encode(const std::vector<std::uint32_t>& xs,
                                         encoding enc) {
  bool concise = enc == encoding::concise;
  auto zero_fill = [&](std::uint64_t blocks, unsigned pos) -> std::uint32_t {
    return concise ? (pos << 25) | static_cast<std::uint32_t>(blocks - 1)
                   : static_cast<std::uint32_t>(blocks);
  };
  auto one_fill = [&](std::uint64_t blocks, unsigned pos) {
    return 0x40000000u | zero_fill(blocks, pos);
  };
  auto one_bit = [](std::uint32_t w) {
    auto p = w & 0x7FFFFFFFu;
    return (w >> 31) && p != 0 && (p & (p - 1)) == 0;
  };
  auto low_bit = [](std::uint32_t p) {
    unsigned i = 0;
    while (!((p >> i) & 1u))
      ++i;
    return i;
  };
  std::map<std::uint64_t, std::uint32_t> blocks;
  for (auto x : xs)
    blocks[x / 31] |= 0x80000000u | (1u << (x % 31));
  std::vector<std::uint32_t> words;
  std::uint64_t previous = 0;
  for (auto [index, literal] : blocks) {
    if (words.empty()) {
      if (index == 1)
        words.push_back(0x80000000u);
      else if (index >= 2)
        words.push_back(zero_fill(index, 0));
      words.push_back(literal);
      previous = index;
      continue;
    }
    auto gap = index - previous - 1;
    if (gap >= 1) {
      auto& last = words.back();
      if (concise && one_bit(last))
        last = zero_fill(gap + 1, 1 + low_bit(last & 0x7FFFFFFFu));
      else if (gap == 1)
        words.push_back(0x80000000u);
      else
        words.push_back(zero_fill(gap, 0));
      words.push_back(literal);
    } else {
      words.push_back(literal);
      if (literal == 0xFFFFFFFFu) {
        auto prev = words[words.size() - 2];
        bool prev_fill = !(prev >> 31);
        if (prev_fill && ((prev >> 30) & 1u)) {
          words.pop_back();
          words.back() += 1;
        } else if (!prev_fill) {
          auto inverted = ~prev;
          bool single = inverted != 0 && (inverted & (inverted - 1)) == 0;
          if (inverted == 0) {
            words.pop_back();
            words.back() = one_fill(2, 0);
          } else if (concise && single) {
            words.pop_back();
            words.back() = one_fill(2, 1 + low_bit(inverted));
          }
        }
      }
    }
    previous = index;
  }
  return words;
}

/// Reference results via the standard sorted-range algorithms, independent
/// of the library's own list operations.
inline std::vector<std::uint32_t> set_apply(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b,
                                            int op) {
  std::vector<std::uint32_t> out;
  auto to = std::back_inserter(out);
  switch (op) {
    case 0:
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), to);
      break;
    case 1:
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), to);
      break;
    case 2:
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), to);
      break;
    default:
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), to);
  }
  return out;
}

/// Random sets shaped to hit every word type: sparse points, dense noise,
/// long runs of ones with single holes, and isolated bits between runs.
inline std::vector<std::uint32_t> random_elements(std::mt19937_64& rng,
                                                  std::uint32_t limit = 200000) {
  // Membership flags; every value drawn below stays under limit + 2048.
  std::vector<bool> member(std::uint64_t{limit} + 2048);
  bool any = false;
  auto insert = [&](std::uint32_t x) {
    member[x] = true;
    any = true;
  };
  auto pick = [&](std::uint64_t n) { return rng() % n; };
  switch (pick(5)) {
    case 0: { // sparse
      auto n = pick(60);
      for (std::uint64_t i = 0; i < n; ++i)
        insert(static_cast<std::uint32_t>(pick(limit)));
      break;
    }
    case 1: { // dense noise in a window
      auto lo = pick(limit / 2);
      auto width = 1 + pick(2000);
      for (std::uint64_t i = 0; i < width; ++i)
        if (pick(3) != 0)
          insert(static_cast<std::uint32_t>(lo + i));
      break;
    }
    case 2:
    case 3: { // runs
      std::uint64_t at = pick(200);
      while (at < limit) {
        auto len = 1 + pick(pick(2) ? 40 : 400);
        bool ones = pick(2);
        for (std::uint64_t i = 0; i < len && at + i < limit; ++i)
          if (ones)
            insert(static_cast<std::uint32_t>(at + i));
        at += len;
        if (pick(4) == 0)
          insert(static_cast<std::uint32_t>(std::min<std::uint64_t>(
            at + pick(31), limit - 1)));
        if (ones && pick(3) == 0 && any)
          member[static_cast<std::uint32_t>(at - 1 - pick(len))] = false;
        at += pick(100);
      }
      break;
    }
    default: { // block-aligned full blocks with one flipped bit
      auto n = pick(12);
      for (std::uint64_t i = 0; i < n; ++i) {
        auto block = pick(limit / 31);
        auto count = 1 + pick(5);
        for (std::uint64_t b = block; b < block + count && b < limit / 31; ++b)
          for (unsigned bit = 0; bit < 31; ++bit)
            insert(static_cast<std::uint32_t>(b * 31 + bit));
        if (pick(2))
          member[static_cast<std::uint32_t>(block * 31 + pick(31))] = false;
        insert(static_cast<std::uint32_t>(
          std::min<std::uint64_t>((block + count + pick(3)) * 31 + pick(31),
                                  limit - 1)));
      }
      break;
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < member.size(); ++x)
    if (member[x])
      out.push_back(x);
  return out;
}

} // namespace oracle
