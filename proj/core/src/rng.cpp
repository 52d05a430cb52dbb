#include "qloc/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qloc {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed & 0xffffffffu),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream_id & 0xffffffffu),
      static_cast<std::uint32_t>(stream_id >> 32),
  };
  engine_.seed(seq);
}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::next_double() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("RngStream::uniform: empty range");
  }
  return lo + (hi - lo) * next_double();
}

double RngStream::normal(double mean, double stddev) {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
}

long RngStream::binomial(long trials, double p) {
  if (trials < 0) {
    throw std::invalid_argument("RngStream::binomial: negative trial count");
  }
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw std::invalid_argument(
        "RngStream::binomial: p must lie in [0, 1]");
  }
  long ones = 0;
  for (long i = 0; i < trials; ++i) {
    if (next_double() < p) {
      ++ones;
    }
  }
  return ones;
}

}  // namespace qloc
