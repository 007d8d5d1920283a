#include "concise/bench.hpp"

#include "concise/basic_set.hpp"
#include "concise/error.hpp"
#include "concise/plain_set.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <ostream>
#include <random>
#include <string>

namespace concise {

namespace {

volatile std::uint64_t sink = 0;

constexpr unsigned warmup_runs = 3;

template <class F>
double mean_nanos(unsigned repetitions, F&& run) {
  using clock = std::chrono::steady_clock;
  for (unsigned i = 0; i < warmup_runs; ++i)
    sink = sink + run(i);
  std::chrono::nanoseconds total{0};
  for (unsigned i = 0; i < repetitions; ++i) {
    auto start = clock::now();
    auto observed = run(i);
    total += clock::now() - start;
    sink = sink + observed;
  }
  return static_cast<double>(total.count()) / repetitions;
}

std::string format_double(double x) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::vector<std::uint32_t> set_bits(std::span<const std::uint32_t> xs) {
  std::vector<std::uint32_t> bm;
  for (auto x : xs) {
    auto word = std::size_t{x} / 32;
    if (word >= bm.size())
      bm.resize(word + 1);
    bm[word] |= std::uint32_t{1} << (x % 32);
  }
  return bm;
}

std::optional<set_op> op_of(metric m) {
  switch (m) {
    case metric::intersect:
      return set_op::and_;
    case metric::union_:
      return set_op::or_;
    case metric::xor_:
      return set_op::xor_;
    case metric::diff:
      return set_op::andnot;
    default:
      return std::nullopt;
  }
}

/// Operands of one spec point, materialized for every structure.
struct operands {
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
  concise_set concise_a, concise_b;
  wah_set wah_a, wah_b;
  std::vector<std::uint32_t> bitmap_a, bitmap_b;
};

template <class Set>
double time_compressed(const Set& a, const Set& b,
                       std::span<const std::uint32_t> elements, metric m,
                       unsigned reps, std::mt19937_64& rng) {
  if (auto op = op_of(m))
    return mean_nanos(reps, [&](unsigned) {
      return perform_operation(a, b, *op).word_count();
    });
  if (m == metric::append) {
    auto total = mean_nanos(reps, [&](unsigned) {
      Set s;
      for (auto x : elements)
        s.append(x);
      return s.word_count();
    });
    return total / elements.size();
  }
  std::vector<std::uint32_t> victims(reps + warmup_runs);
  for (auto& v : victims)
    v = elements[uniform_below(rng, elements.size())];
  std::size_t next = 0;
  return mean_nanos(reps, [&](unsigned) {
    return a.remove(victims[next++]).word_count();
  });
}

double time_bitmap(const operands& in, metric m, unsigned reps,
                   std::mt19937_64& rng) {
  if (auto op = op_of(m))
    return mean_nanos(reps, [&](unsigned) {
      return bitmap_op(in.bitmap_a, in.bitmap_b, *op).size();
    });
  if (m == metric::append) {
    auto total = mean_nanos(reps, [&](unsigned) {
      return set_bits(in.a).size();
    });
    return total / in.a.size();
  }
  std::vector<std::uint32_t> victims(reps + warmup_runs);
  for (auto& v : victims)
    v = in.a[uniform_below(rng, in.a.size())];
  std::size_t next = 0;
  return mean_nanos(reps, [&](unsigned) {
    auto copy = in.bitmap_a;
    auto x = victims[next++];
    copy[x / 32] &= ~(std::uint32_t{1} << (x % 32));
    while (!copy.empty() && copy.back() == 0)
      copy.pop_back();
    return copy.size();
  });
}

double time_array(const operands& in, metric m, unsigned reps,
                  std::mt19937_64& rng) {
  if (auto op = op_of(m))
    return mean_nanos(reps, [&](unsigned) {
      return list_op(in.a, in.b, *op).size();
    });
  if (m == metric::append) {
    auto total = mean_nanos(reps, [&](unsigned) {
      std::vector<std::uint32_t> xs;
      for (auto x : in.a)
        xs.push_back(x);
      return xs.size();
    });
    return total / in.a.size();
  }
  std::vector<std::uint32_t> victims(reps + warmup_runs);
  for (auto& v : victims)
    v = in.a[uniform_below(rng, in.a.size())];
  std::size_t next = 0;
  return mean_nanos(reps, [&](unsigned) {
    auto copy = in.a;
    auto it = std::lower_bound(copy.begin(), copy.end(), victims[next++]);
    if (it != copy.end())
      copy.erase(it);
    return copy.size();
  });
}

double words_per_element(const operands& in, structure s) {
  auto n = static_cast<double>(in.a.size());
  switch (s) {
    case structure::concise:
      return static_cast<double>(in.concise_a.word_count()) / n;
    case structure::wah:
      return static_cast<double>(in.wah_a.word_count()) / n;
    case structure::bitmap:
      return static_cast<double>(in.bitmap_a.size()) / n;
    case structure::array:
      return 1.0;
  }
  return 0.0;
}

} // namespace

std::string_view to_string(structure s) noexcept {
  switch (s) {
    case structure::concise:
      return "concise";
    case structure::wah:
      return "wah";
    case structure::bitmap:
      return "bitmap";
    case structure::array:
      return "array";
  }
  return "?";
}

std::string_view to_string(metric m) noexcept {
  switch (m) {
    case metric::words:
      return "wordsPerElement";
    case metric::intersect:
      return "intersectNanos";
    case metric::union_:
      return "unionNanos";
    case metric::xor_:
      return "xorNanos";
    case metric::diff:
      return "diffNanos";
    case metric::append:
      return "appendNanos";
    case metric::remove:
      return "removeNanos";
  }
  return "?";
}

std::optional<structure> parse_structure(std::string_view name) noexcept {
  for (auto s : all_structures)
    if (to_string(s) == name)
      return s;
  return std::nullopt;
}

std::optional<metric> parse_metric(std::string_view name) noexcept {
  constexpr std::pair<std::string_view, metric> names[] = {
    {"words", metric::words},   {"intersect", metric::intersect},
    {"union", metric::union_},  {"xor", metric::xor_},
    {"diff", metric::diff},     {"append", metric::append},
    {"remove", metric::remove},
  };
  for (auto [text, m] : names)
    if (text == name)
      return m;
  return std::nullopt;
}

std::uint64_t second_operand_seed(std::uint64_t seed) noexcept {
  return seed + 0x9E3779B97F4A7C15ull;
}

std::vector<benchmark_result> run_benchmark(const generator_spec& spec,
                                            std::span<const structure> subjects,
                                            std::span<const metric> metrics,
                                            unsigned repetitions) {
  if (spec.cardinality == 0)
    throw error{errc::infeasible_spec, "benchmarks need a nonempty set"};
  if (repetitions == 0)
    throw error{errc::infeasible_spec, "repetitions must be positive"};
  operands in;
  in.a = generate(spec);
  auto other = spec;
  other.seed = second_operand_seed(spec.seed);
  in.b = generate(other);
  in.concise_a = concise_set::from_sorted(in.a);
  in.concise_b = concise_set::from_sorted(in.b);
  in.wah_a = wah_set::from_sorted(in.a);
  in.wah_b = wah_set::from_sorted(in.b);
  in.bitmap_a = bitmap_from_list(in.a);
  in.bitmap_b = bitmap_from_list(in.b);
  std::vector<benchmark_result> out;
  for (auto s : subjects) {
    for (auto m : metrics) {
      if (m == metric::words) {
        out.push_back({s, m, spec, words_per_element(in, s), 1});
        continue;
      }
      std::mt19937_64 rng{spec.seed};
      double value = 0;
      switch (s) {
        case structure::concise:
          value = time_compressed(in.concise_a, in.concise_b, in.a, m,
                                  repetitions, rng);
          break;
        case structure::wah:
          value = time_compressed(in.wah_a, in.wah_b, in.a, m, repetitions,
                                  rng);
          break;
        case structure::bitmap:
          value = time_bitmap(in, m, repetitions, rng);
          break;
        case structure::array:
          value = time_array(in, m, repetitions, rng);
          break;
      }
      out.push_back({s, m, spec, value, repetitions});
    }
  }
  return out;
}

void write_csv_header(std::ostream& out) {
  out << "structure,distribution,cardinality,density_or_maxratio,skew,seed,"
         "metric,value,repetitions\n";
}

void write_csv_row(std::ostream& out, const benchmark_result& row) {
  auto ratio = row.spec.dist == distribution::uniform ? row.spec.density
                                                      : row.spec.max_ratio;
  out << to_string(row.subject) << ',' << to_string(row.spec.dist) << ','
      << row.spec.cardinality << ',' << format_double(ratio) << ','
      << format_double(row.spec.skew) << ',' << row.spec.seed << ','
      << to_string(row.measured) << ',' << format_double(row.value) << ','
      << row.repetitions << '\n';
}

} // namespace concise
