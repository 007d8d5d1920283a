#pragma once

#include "concise/datagen.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace concise {

enum class structure : std::uint8_t { concise, wah, bitmap, array };

enum class metric : std::uint8_t {
  words,
  intersect,
  union_,
  xor_,
  diff,
  append,
  remove,
};

inline constexpr structure all_structures[] = {
  structure::concise, structure::wah, structure::bitmap, structure::array};

inline constexpr metric all_metrics[] = {
  metric::words, metric::intersect, metric::union_, metric::xor_,
  metric::diff,  metric::append,    metric::remove};

std::string_view to_string(structure s) noexcept;

/// CSV column value, e.g. "wordsPerElement" or "intersectNanos".
std::string_view to_string(metric m) noexcept;

std::optional<structure> parse_structure(std::string_view name) noexcept;

/// Accepts the short flag names: words, intersect, union, xor, diff, append,
/// remove.
std::optional<metric> parse_metric(std::string_view name) noexcept;

/// One measured value. Timings are the mean over `repetitions` runs in
/// nanoseconds per operation; words per element is exact and reported with
/// one repetition.
struct benchmark_result {
  structure subject;
  metric measured;
  generator_spec spec;
  double value;
  unsigned repetitions;
};

/// Runs every (structure, metric) pair for one spec point. The second
/// operand of binary operations is generated from the same spec with
/// `second_operand_seed(spec.seed)`.
///
/// Throws `errc::infeasible_spec` for an empty or invalid spec.
std::vector<benchmark_result> run_benchmark(const generator_spec& spec,
                                            std::span<const structure> subjects,
                                            std::span<const metric> metrics,
                                            unsigned repetitions = 100);

std::uint64_t second_operand_seed(std::uint64_t seed) noexcept;

/// structure,distribution,cardinality,density_or_maxratio,skew,seed,metric,
/// value,repetitions
void write_csv_header(std::ostream& out);

void write_csv_row(std::ostream& out, const benchmark_result& row);

} // namespace concise
