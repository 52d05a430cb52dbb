#ifndef QLOC_FINGERPRINT_HPP
#define QLOC_FINGERPRINT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qloc/encoding.hpp"

namespace qloc {

struct Location {
  int id;
  double x_ft;
  double y_ft;
};

struct FingerprintEntry {
  Location location;
  AmplitudeVector vector;
};

// Offline radio map: one amplitude-encoded RSS vector per surveyed
// location. Immutable after construction; all vectors share one padded
// dimension and ids are unique.
class FingerprintDb {
 public:
  FingerprintDb(int ap_count, std::vector<FingerprintEntry> entries);

  int ap_count() const { return ap_count_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t dimension() const;  // padded vector dimension
  std::span<const FingerprintEntry> entries() const { return entries_; }

 private:
  int ap_count_;
  std::vector<FingerprintEntry> entries_;
};

struct TestSample {
  Location truth;
  AmplitudeVector vector;
};

// How per-location similarity scores are produced.
struct MatchMode {
  enum class Kind { classical, quantum_exact, quantum_shots };

  Kind kind = Kind::classical;
  long shots = 0;
  std::uint64_t seed = 0;

  static MatchMode classical() { return {Kind::classical, 0, 0}; }
  static MatchMode quantum_exact() { return {Kind::quantum_exact, 0, 0}; }
  static MatchMode quantum_shots(long shots, std::uint64_t seed);
};

struct LocalizationResult {
  Location estimated;
  std::vector<double> scores;  // one per db entry, in db order
};

// Scores the sample against every fingerprint location and returns the
// argmax; ties break toward the lowest location id. In shot mode each
// comparison draws from RngStream(mode.seed, make_stream_id(test_index,
// location id)), so results do not depend on evaluation order.
LocalizationResult localize(const FingerprintDb& db, const TestSample& sample,
                            const MatchMode& mode,
                            std::uint64_t test_index = 0);

// Euclidean distance in feet.
double distance_error(const Location& estimated, const Location& truth);

// (sum_i a_i b_i)^2, the classical evaluation of the same score the
// circuit measures.
double classical_cosine_similarity(const AmplitudeVector& a,
                                   const AmplitudeVector& b);

struct ResourceCost {
  int qubits_per_match;
  long circuit_runs;
  long classical_space;  // reals held by the classical matcher
};

// Space/time accounting for matching one test vector against m locations
// over N APs: 2*ceil(log2 N)+1 qubits (one-qubit floor per register), m
// circuit runs, N*m stored reals classically.
ResourceCost resource_cost(int ap_count, int location_count);

}  // namespace qloc

#endif  // QLOC_FINGERPRINT_HPP
