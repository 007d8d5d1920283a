#include "concise/datagen.hpp"

#include "concise/error.hpp"
#include "concise/word.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_set>

namespace concise {

namespace {

// Series expansions keep the integrals accurate as the exponent nears 1.
double log1p_over_x(double x) {
  if (std::abs(x) > 1e-8)
    return std::log1p(x) / x;
  return 1.0 - x * (0.5 - x * (1.0 / 3.0 - 0.25 * x));
}

double expm1_over_x(double x) {
  if (std::abs(x) > 1e-8)
    return std::expm1(x) / x;
  return 1.0 + x * 0.5 * (1.0 + x / 3.0 * (1.0 + 0.25 * x));
}

} // namespace

std::string_view to_string(distribution d) noexcept {
  return d == distribution::uniform ? "uniform" : "zipf";
}

std::uint64_t generator_spec::range() const {
  auto n = static_cast<double>(cardinality);
  auto exact = dist == distribution::uniform ? n / density : n * max_ratio;
  // 1e4 / 1e-4 is not exactly 1e8 in binary; snap near-integers first.
  auto nearest = std::round(exact);
  auto r = std::abs(exact - nearest) <= 1e-9 * nearest ? nearest
                                                       : std::ceil(exact);
  // Cap before converting so huge ratios cannot overflow the cast.
  if (r > 1e18)
    return std::numeric_limits<std::uint64_t>::max();
  return std::max(cardinality, static_cast<std::uint64_t>(r));
}

void generator_spec::validate() const {
  if (dist == distribution::uniform && !(density > 0.0 && density <= 1.0))
    throw error{errc::infeasible_spec,
                "density " + std::to_string(density) + " not in (0, 1]"};
  if (dist == distribution::zipf && !(max_ratio >= 1.0))
    throw error{errc::infeasible_spec,
                "max/cardinality ratio " + std::to_string(max_ratio) + " < 1"};
  if (dist == distribution::zipf && !(skew > 0.0))
    throw error{errc::infeasible_spec, "skew must be positive"};
  if (range() > std::uint64_t{concise_max_allowed} + 1)
    throw error{errc::infeasible_spec,
                "range " + std::to_string(range()) + " exceeds "
                  + std::to_string(std::uint64_t{concise_max_allowed} + 1)};
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  auto limit = top - top % n;
  for (;;) {
    auto x = rng();
    if (x < limit)
      return x % n;
  }
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

zipf_sampler::zipf_sampler(std::uint64_t n, double s) : n_{n}, s_{s} {
  if (n == 0 || !(s > 0.0))
    throw error{errc::infeasible_spec, "zipf needs n >= 1 and s > 0"};
  h_integral_x1_ = h_integral(1.5) - 1.0;
  h_integral_n_ = h_integral(static_cast<double>(n) + 0.5);
  threshold_ = 2.0 - h_integral_inverse(h_integral(2.5) - h(2.0));
}

double zipf_sampler::h(double x) const {
  return std::exp(-s_ * std::log(x));
}

double zipf_sampler::h_integral(double x) const {
  auto log_x = std::log(x);
  return expm1_over_x((1.0 - s_) * log_x) * log_x;
}

double zipf_sampler::h_integral_inverse(double x) const {
  auto t = std::max(-1.0, x * (1.0 - s_));
  return std::exp(log1p_over_x(t) * x);
}

std::uint64_t zipf_sampler::operator()(std::mt19937_64& rng) const {
  auto n = static_cast<double>(n_);
  for (;;) {
    auto u = h_integral_n_
             + uniform_unit(rng) * (h_integral_x1_ - h_integral_n_);
    auto x = h_integral_inverse(u);
    auto k = std::clamp(std::floor(x + 0.5), 1.0, n);
    if (k - x <= threshold_ || u >= h_integral(k + 0.5) - h(k))
      return static_cast<std::uint64_t>(k) - 1;
  }
}

std::vector<std::uint32_t> generate(const generator_spec& spec) {
  spec.validate();
  auto n = spec.cardinality;
  auto range = spec.range();
  std::vector<std::uint32_t> out;
  if (n == 0)
    return out;
  if (n == range) {
    out.resize(n);
    std::iota(out.begin(), out.end(), 0u);
    return out;
  }
  std::mt19937_64 rng{spec.seed};
  std::unordered_set<std::uint32_t> seen;
  seen.reserve(n);
  if (spec.dist == distribution::uniform) {
    while (seen.size() < n)
      seen.insert(static_cast<std::uint32_t>(uniform_below(rng, range)));
  } else {
    zipf_sampler zipf{range, spec.skew};
    // Heavy skew with little headroom can take unbounded draws to find the
    // last distinct values.
    auto budget = 1000 * n + 1'000'000;
    while (seen.size() < n) {
      if (budget-- == 0)
        throw error{errc::infeasible_spec,
                    "zipf draws exhausted before reaching "
                      + std::to_string(n) + " distinct values"};
      seen.insert(static_cast<std::uint32_t>(zipf(rng)));
    }
  }
  out.assign(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

void write_integers(std::ostream& out, const std::vector<std::uint32_t>& xs) {
  for (auto x : xs)
    out << x << '\n';
}

std::vector<std::uint32_t> read_integers(std::istream& in) {
  std::vector<std::uint32_t> out;
  std::string token;
  while (in >> token) {
    std::uint32_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                     value);
    if (ec != std::errc{} || end != token.data() + token.size())
      throw error{errc::invalid_argument, "not a 32-bit integer: " + token};
    out.push_back(value);
  }
  return out;
}

} // namespace concise
