#include "concise/basic_set.hpp"

#include "support/oracle.hpp"

#include <doctest.h>

#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace concise;

namespace {

using bytes = std::vector<std::uint8_t>;

bytes golden(const std::string& name) {
  std::ifstream in{std::string{CONCISE_GOLDEN_DIR} + "/" + name,
                   std::ios::binary};
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
}

template <class Set>
errc decode_error(const bytes& data) {
  try {
    Set::deserialize(data);
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected concise::error");
  return errc::invalid_argument;
}

std::vector<std::uint32_t> run_93_1023() {
  std::vector<std::uint32_t> xs{0, 2};
  for (std::uint32_t x = 31; x <= 93; ++x)
    xs.push_back(x);
  xs.push_back(1023);
  return xs;
}

} // namespace

TEST_CASE("empty set bytes") {
  bytes expected{0x43, 0x4E, 0x43, 0x53, 0x01, 0x00, 0x00, 0x00,
                 0x00, 0x00, 0xFF, 0xFF, 0xFF, 0xFF};
  CHECK(concise_set{}.serialize() == expected);
  CHECK(golden("empty.cncs") == expected);
  CHECK(concise_set::deserialize(expected).empty());
}

TEST_CASE("golden files") {
  CHECK(concise_set::from_sorted(std::vector<std::uint32_t>{0, 62}).serialize()
        == golden("pair_0_62.cncs"));
  CHECK(concise_set::from_sorted(run_93_1023()).serialize()
        == golden("run_93_1023.cncs"));
  CHECK(concise_set::from_sorted(std::vector<std::uint32_t>{1'040'187'422})
          .serialize()
        == golden("max_integer.cncs"));
  CHECK(wah_set::from_sorted(std::vector<std::uint32_t>{93}).serialize()
        == golden("single_93.wahs"));
  CHECK(wah_set{}.serialize() == golden("empty.wahs"));
  CHECK(concise_set::deserialize(golden("run_93_1023.cncs")).decode()
        == run_93_1023());
  CHECK(wah_set::deserialize(golden("single_93.wahs")).decode()
        == std::vector<std::uint32_t>{93});
}

TEST_CASE_TEMPLATE("serialization round-trips", Set, concise_set, wah_set) {
  std::mt19937_64 rng{404};
  for (int i = 0; i < 1000; ++i) {
    auto xs = oracle::random_elements(rng);
    auto s = Set::from_sorted(xs);
    auto data = s.serialize();
    REQUIRE(data.size() == 14 + 4 * s.word_count());
    auto back = Set::deserialize(data);
    REQUIRE(back == s);
    REQUIRE(back.serialize() == data);
  }
}

TEST_CASE("malformed input") {
  auto good = golden("pair_0_62.cncs");

  for (std::size_t cut = 0; cut < good.size(); ++cut) {
    bytes shorter(good.begin(), good.begin() + static_cast<long>(cut));
    CHECK(decode_error<concise_set>(shorter) == errc::truncated_input);
  }

  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK(decode_error<concise_set>(bad_magic) == errc::malformed_header);
  CHECK(decode_error<wah_set>(good) == errc::malformed_header);

  auto bad_version = good;
  bad_version[4] = 2;
  CHECK(decode_error<concise_set>(bad_version) == errc::malformed_header);

  auto bad_reserved = good;
  bad_reserved[5] = 1;
  CHECK(decode_error<concise_set>(bad_reserved) == errc::malformed_header);

  auto trailing = good;
  trailing.push_back(0);
  CHECK(decode_error<concise_set>(trailing) == errc::malformed_header);

  auto wrong_max = good;
  wrong_max[10] = 61;
  CHECK(decode_error<concise_set>(wrong_max) == errc::invalid_word);

  // Last word replaced by an empty literal.
  auto empty_tail = good;
  empty_tail[18] = 0x00;
  CHECK(decode_error<concise_set>(empty_tail) == errc::invalid_word);

  auto empty_with_max = golden("empty.cncs");
  empty_with_max[10] = 0;
  CHECK(decode_error<concise_set>(empty_with_max) == errc::malformed_header);

  // A WAH fill of zero blocks.
  auto wah = golden("single_93.wahs");
  wah[14] = 0x00;
  CHECK(decode_error<wah_set>(wah) == errc::invalid_word);
}
