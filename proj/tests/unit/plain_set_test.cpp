#include "concise/error.hpp"
#include "concise/plain_set.hpp"

#include "support/oracle.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

using namespace concise;

TEST_CASE("plain_op examples") {
  plain_set a{{1, 2}, true};
  plain_set b{{2, 3}, true};
  CHECK(plain_op(a, b, set_op::and_).elements()
        == std::vector<std::uint32_t>{2});
  CHECK(plain_op(a, b, set_op::or_).elements()
        == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(plain_op(a, b, set_op::xor_).elements()
        == std::vector<std::uint32_t>{1, 3});
  CHECK(plain_op(a, b, set_op::andnot).elements()
        == std::vector<std::uint32_t>{1});
  CHECK(plain_op(a, plain_set{{}, true}, set_op::or_) == a);
  CHECK(plain_op(a, b, set_op::and_).has_bitmap());
  CHECK_FALSE(plain_op(plain_set{{1}}, b, set_op::and_).has_bitmap());
}

TEST_CASE("plain_set rejects unsorted input") {
  bool threw = false;
  try {
    plain_set{{4, 4}};
  } catch (const error& e) {
    threw = e.code() == errc::unsorted_input;
  }
  CHECK(threw);
}

TEST_CASE("list and bitmap paths agree on 1000 random pairs") {
  std::mt19937_64 rng{1000};
  for (int i = 0; i < 1000; ++i) {
    auto xa = oracle::random_elements(rng, 30000);
    auto xb = oracle::random_elements(rng, 30000);
    plain_set a{xa, true};
    plain_set b{xb, true};
    REQUIRE(list_from_bitmap(*a.bitmap()) == xa);
    for (int k = 0; k < 4; ++k) {
      // plain_op throws if its two paths disagree.
      auto r = plain_op(a, b, all_set_ops[k]);
      REQUIRE(r.elements() == oracle::set_apply(xa, xb, k));
    }
    for (int probe = 0; probe < 10; ++probe) {
      auto x = static_cast<std::uint32_t>(rng() % 31000);
      auto in_bitmap = x / 32 < a.bitmap()->size()
                       && (((*a.bitmap())[x / 32] >> (x % 32)) & 1u);
      REQUIRE(a.contains(x) == in_bitmap);
    }
  }
}

TEST_CASE("memory words") {
  CHECK(plain_bitmap_words(plain_set{}) == 0);
  std::vector<std::uint32_t> first32(32);
  std::iota(first32.begin(), first32.end(), 0u);
  CHECK(plain_bitmap_words(plain_set{first32}) == 1);
  CHECK(plain_bitmap_words(plain_set{{1'000'000}}) == 31'251);
  CHECK(plain_array_words(plain_set{{1, 5, 9}}) == 3);
  CHECK(bitmap_from_list(std::vector<std::uint32_t>{1'000'000}).size()
        == 31'251);
}
