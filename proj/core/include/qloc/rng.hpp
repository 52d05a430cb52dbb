#ifndef QLOC_RNG_HPP
#define QLOC_RNG_HPP

#include <cstdint>
#include <random>

namespace qloc {

// Seeded random stream. A stream is identified by (seed, stream_id); the
// same pair always yields the same draw sequence, and distinct stream ids
// give independent sequences, so work split across streams is reproducible
// regardless of scheduling.
//
// Doubles and normals are derived from the raw mt19937_64 output directly
// rather than through <random> distributions, whose algorithms are
// implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double next_double();

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Gaussian via Box-Muller, one variate per call.
  double normal(double mean, double stddev);

  // Number of successes in `trials` Bernoulli(p) draws. O(trials).
  long binomial(long trials, double p);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

// Packs (test index, location id) into a stream id so that every
// (sample, fingerprint location) comparison draws from its own stream.
constexpr std::uint64_t make_stream_id(std::uint64_t test_index,
                                       std::uint32_t location_id) {
  return (test_index << 32) ^ static_cast<std::uint64_t>(location_id);
}

}  // namespace qloc

#endif  // QLOC_RNG_HPP
