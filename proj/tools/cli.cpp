#include "cli.hpp"

#include "concise/concise.hpp"

#include <CLI11.hpp>

#include <bit>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace concise::cli {

namespace {

using any_set = std::variant<concise_set, wah_set>;

/// Raised for bad flag values that CLI11 cannot check on its own.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in{path, std::ios::binary};
  if (!in)
    throw std::runtime_error{"cannot open " + path};
  return {std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out{path, std::ios::binary};
  if (!out)
    throw std::runtime_error{"cannot write " + path};
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out)
    throw std::runtime_error{"write failed: " + path};
}

any_set load_set(const std::string& path) {
  auto bytes = read_file(path);
  auto magic = std::string(bytes.begin(),
                           bytes.begin() + std::min<std::size_t>(4, bytes.size()));
  if (magic == concise_codec::magic)
    return concise_set::deserialize(bytes);
  if (magic == wah_codec::magic)
    return wah_set::deserialize(bytes);
  if (bytes.size() < 4)
    throw error{errc::truncated_input, path + " is too short for a header"};
  throw error{errc::malformed_header, path + " has an unknown magic"};
}

std::string hex_word(word_type w) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08X", w);
  return buf;
}

template <class Set>
void inspect(const Set& s, std::ostream& out) {
  constexpr auto fmt = Set::fmt;
  out << "format " << (fmt == format::concise ? "concise" : "wah") << ", words "
      << s.word_count() << ", cardinality " << s.cardinality() << ", max ";
  if (auto m = s.max())
    out << *m << '\n';
  else
    out << "none\n";
  std::uint64_t block = 0;
  auto words = s.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto w = words[i];
    out << '#' << i << ' ' << hex_word(w) << ' ';
    std::uint64_t blocks = 1;
    if (is_literal(w)) {
      out << "literal, bits=" << std::popcount(w & payload_mask);
    } else {
      blocks = fill_blocks(w, fmt);
      auto ones = classify(w, fmt) == word_kind::one_fill;
      out << "fill " << (ones ? "1's" : "0's");
      if (fmt == format::concise)
        out << ", pos=" << fill_position(w);
      out << ", blocks=" << blocks;
    }
    out << ", range=[" << block * block_bits << ','
        << (block + blocks) * block_bits - 1 << "]\n";
    block += blocks;
  }
}

template <class T>
std::vector<T> parse_names(const std::vector<std::string>& names,
                           std::optional<T> (*parse)(std::string_view) noexcept,
                           const char* what) {
  std::vector<T> out;
  for (auto& name : names) {
    auto value = parse(name);
    if (!value)
      throw usage_error{std::string{"unknown "} + what + ": " + name};
    out.push_back(*value);
  }
  return out;
}

struct spec_flags {
  std::string dist = "uniform";
  std::vector<std::uint64_t> cardinalities{10000};
  std::vector<double> densities{1e-4};
  std::vector<double> max_ratios{1e4};
  double skew = 1.0;
  std::uint64_t seed = 1;

  void attach(CLI::App& app) {
    app.add_option("--dist", dist, "uniform or zipf")
      ->check(CLI::IsMember({"uniform", "zipf"}));
    app.add_option("--cardinality", cardinalities, "set size(s)")
      ->delimiter(',');
    app.add_option("--density", densities, "uniform density value(s)")
      ->delimiter(',');
    app.add_option("--max-ratio", max_ratios, "zipf max/cardinality value(s)")
      ->delimiter(',');
    app.add_option("--skew", skew, "zipf exponent");
    app.add_option("--seed", seed, "PRNG seed");
  }

  std::vector<generator_spec> points() const {
    std::vector<generator_spec> out;
    auto zipf = dist == "zipf";
    auto& ratios = zipf ? max_ratios : densities;
    for (auto n : cardinalities) {
      for (auto r : ratios) {
        generator_spec g;
        g.dist = zipf ? distribution::zipf : distribution::uniform;
        g.cardinality = n;
        (zipf ? g.max_ratio : g.density) = r;
        g.skew = skew;
        g.seed = seed;
        out.push_back(g);
      }
    }
    return out;
  }
};

class output_target {
public:
  output_target(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path);
    if (!file_)
      throw std::runtime_error{"cannot write " + path};
    stream_ = &file_;
  }

  std::ostream& get() {
    return *stream_;
  }

private:
  std::ofstream file_;
  std::ostream* stream_;
};

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Compressed integer sets: CONCISE and WAH encodings"};
  app.name("concise");
  app.require_subcommand(1);

  spec_flags bench_spec;
  std::vector<std::string> structure_names{"concise", "wah", "bitmap", "array"};
  std::vector<std::string> metric_names{"words"};
  unsigned reps = 100;
  std::string bench_output;
  bool parallel = false;
  auto* bench = app.add_subcommand("bench", "run the benchmark matrix as CSV");
  bench_spec.attach(*bench);
  bench->add_option("--structures", structure_names,
                    "concise, wah, bitmap, array")
    ->delimiter(',');
  bench->add_option("--metric", metric_names,
                    "words, intersect, union, xor, diff, append, remove, all")
    ->delimiter(',');
  bench->add_option("--reps", reps, "timed repetitions per value")
    ->check(CLI::PositiveNumber);
  bench->add_option("--output", bench_output, "CSV path (default stdout)");
  bench->add_flag("--parallel", parallel, "run spec points concurrently");

  spec_flags gen_spec;
  std::string gen_output;
  auto* gen = app.add_subcommand("generate", "emit a synthetic set as text");
  gen_spec.attach(*gen);
  gen->add_option("--output", gen_output, "text path (default stdout)");

  std::string encode_format = "concise";
  std::string encode_input = "-";
  std::string encode_output;
  auto* encode = app.add_subcommand("encode",
                                    "encode newline-delimited integers");
  encode->add_option("--format", encode_format, "concise or wah")
    ->check(CLI::IsMember({"concise", "wah"}));
  encode->add_option("--input", encode_input, "text path (default stdin)");
  encode->add_option("--output", encode_output, "set file")->required();

  std::string decode_path;
  auto* decode = app.add_subcommand("decode", "print a set file as integers");
  decode->add_option("file", decode_path)->required();

  std::string inspect_path;
  auto* insp = app.add_subcommand("inspect", "dump the words of a set file");
  insp->add_option("file", inspect_path)->required();

  std::string op_name;
  std::string op_left;
  std::string op_right;
  std::string op_output;
  auto* op = app.add_subcommand("op", "combine two set files");
  op->add_option("operation", op_name, "and, or, xor, andnot")
    ->required()
    ->check(CLI::IsMember({"and", "or", "xor", "andnot"}));
  op->add_option("left", op_left)->required();
  op->add_option("right", op_right)->required();
  op->add_option("--output", op_output, "set file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (bench->parsed()) {
      auto subjects = parse_names<structure>(structure_names, parse_structure,
                                             "structure");
      std::vector<metric> metrics;
      if (metric_names.size() == 1 && metric_names[0] == "all")
        metrics.assign(std::begin(all_metrics), std::end(all_metrics));
      else
        metrics = parse_names<metric>(metric_names, parse_metric, "metric");
      auto points = bench_spec.points();
      std::vector<std::vector<benchmark_result>> rows(points.size());
      if (parallel) {
        std::vector<std::future<std::vector<benchmark_result>>> pending;
        for (auto& p : points)
          pending.push_back(std::async(std::launch::async, [&, p] {
            return run_benchmark(p, subjects, metrics, reps);
          }));
        for (std::size_t i = 0; i < pending.size(); ++i)
          rows[i] = pending[i].get();
      } else {
        for (std::size_t i = 0; i < points.size(); ++i)
          rows[i] = run_benchmark(points[i], subjects, metrics, reps);
      }
      output_target target{bench_output, out};
      write_csv_header(target.get());
      for (auto& point : rows)
        for (auto& row : point)
          write_csv_row(target.get(), row);
    } else if (gen->parsed()) {
      auto points = gen_spec.points();
      if (points.size() != 1)
        throw usage_error{"generate takes exactly one spec point"};
      output_target target{gen_output, out};
      write_integers(target.get(), generate(points.front()));
    } else if (encode->parsed()) {
      std::vector<std::uint32_t> values;
      if (encode_input == "-") {
        values = read_integers(in);
      } else {
        std::ifstream file{encode_input};
        if (!file)
          throw std::runtime_error{"cannot open " + encode_input};
        values = read_integers(file);
      }
      auto bytes = encode_format == "wah"
                     ? wah_set::from_sorted(values).serialize()
                     : concise_set::from_sorted(values).serialize();
      write_file(encode_output, bytes);
    } else if (decode->parsed()) {
      std::visit([&](const auto& s) { write_integers(out, s.decode()); },
                 load_set(decode_path));
    } else if (insp->parsed()) {
      std::visit([&](const auto& s) { inspect(s, out); },
                 load_set(inspect_path));
    } else if (op->parsed()) {
      auto kind = *parse_set_op(op_name);
      auto left = load_set(op_left);
      auto right = load_set(op_right);
      if (left.index() != right.index())
        throw std::runtime_error{"operands use different encodings"};
      std::visit(
        [&](const auto& a) {
          using set_type = std::decay_t<decltype(a)>;
          auto& b = std::get<set_type>(right);
          write_file(op_output, perform_operation(a, b, kind).serialize());
        },
        left);
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

} // namespace concise::cli
