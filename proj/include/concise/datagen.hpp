#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string_view>
#include <vector>

namespace concise {

enum class distribution : std::uint8_t { uniform, zipf };

std::string_view to_string(distribution d) noexcept;

/// Parameters of one synthetic integer set.
///
/// Uniform sets draw from [0, ceil(cardinality / density)); Zipf sets draw
/// from [0, ceil(cardinality * max_ratio)) with P(v) proportional to
/// 1 / (v + 1)^skew.
struct generator_spec {
  distribution dist = distribution::uniform;
  std::uint64_t cardinality = 0;
  double density = 1.0;
  double max_ratio = 1.0;
  double skew = 1.0;
  std::uint64_t seed = 0;

  /// Size of the integer range the values are drawn from.
  std::uint64_t range() const;

  /// Throws `errc::infeasible_spec` for out-of-domain parameters.
  void validate() const;
};

/// Exactly `spec.cardinality` distinct integers in ascending order.
///
/// The stream comes from std::mt19937_64 seeded with `spec.seed`, whose
/// output sequence the C++ standard fixes. Integers are mapped to a range by
/// rejection of the biased tail, reals as the top 53 bits times 2^-53, so
/// the same spec yields the same list on every platform. Duplicates are
/// rejected and redrawn.
std::vector<std::uint32_t> generate(const generator_spec& spec);

/// Draws from {0, ..., n - 1} with P(v) proportional to 1 / (v + 1)^s using
/// rejection-inversion (Hörmann and Derflinger), in O(1) expected time.
class zipf_sampler {
public:
  zipf_sampler(std::uint64_t n, double s);

  std::uint64_t operator()(std::mt19937_64& rng) const;

private:
  double h(double x) const;
  double h_integral(double x) const;
  double h_integral_inverse(double x) const;

  std::uint64_t n_;
  double s_;
  double h_integral_x1_;
  double h_integral_n_;
  double threshold_;
};

/// Uniform integer in [0, n) without modulo bias.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Uniform real in [0, 1).
double uniform_unit(std::mt19937_64& rng);

/// Newline-delimited decimal integers, one per line.
void write_integers(std::ostream& out, const std::vector<std::uint32_t>& xs);

/// Reads whitespace-separated decimal integers. Throws
/// `errc::invalid_argument` on anything else or on values above 2^32 - 1.
std::vector<std::uint32_t> read_integers(std::istream& in);

} // namespace concise
