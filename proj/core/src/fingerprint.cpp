#include "qloc/fingerprint.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "qloc/rng.hpp"
#include "qloc/swap_test.hpp"

namespace qloc {

FingerprintDb::FingerprintDb(int ap_count,
                             std::vector<FingerprintEntry> entries)
    : ap_count_(ap_count), entries_(std::move(entries)) {
  if (ap_count < 1) {
    throw std::invalid_argument("FingerprintDb: ap_count must be >= 1");
  }
  std::unordered_set<int> ids;
  for (const auto& entry : entries_) {
    if (entry.vector.dimension() != entries_.front().vector.dimension()) {
      throw std::invalid_argument(
          "FingerprintDb: entries have mixed vector dimensions");
    }
    if (!ids.insert(entry.location.id).second) {
      throw std::invalid_argument("FingerprintDb: duplicate location id " +
                                  std::to_string(entry.location.id));
    }
  }
}

std::size_t FingerprintDb::dimension() const {
  if (entries_.empty()) {
    throw std::logic_error("FingerprintDb: empty database has no dimension");
  }
  return entries_.front().vector.dimension();
}

MatchMode MatchMode::quantum_shots(long shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("MatchMode: shot count must be >= 1");
  }
  return {Kind::quantum_shots, shots, seed};
}

LocalizationResult localize(const FingerprintDb& db, const TestSample& sample,
                            const MatchMode& mode,
                            std::uint64_t test_index) {
  if (db.size() == 0) {
    throw std::invalid_argument("localize: empty fingerprint database");
  }
  if (sample.vector.dimension() != db.dimension()) {
    throw std::invalid_argument(
        "localize: sample dimension does not match database");
  }

  LocalizationResult result{db.entries().front().location, {}};
  result.scores.reserve(db.size());

  bool first = true;
  double best_score = 0.0;
  for (const auto& entry : db.entries()) {
    double score = 0.0;
    switch (mode.kind) {
      case MatchMode::Kind::classical:
        score = classical_cosine_similarity(sample.vector, entry.vector);
        break;
      case MatchMode::Kind::quantum_exact:
        score = exact_similarity(sample.vector, entry.vector);
        break;
      case MatchMode::Kind::quantum_shots: {
        RngStream stream(
            mode.seed,
            make_stream_id(test_index,
                           static_cast<std::uint32_t>(entry.location.id)));
        score =
            estimate_similarity(sample.vector, entry.vector, mode.shots,
                                stream)
                .value;
        break;
      }
    }
    result.scores.push_back(score);

    const bool better =
        first || score > best_score ||
        (score == best_score && entry.location.id < result.estimated.id);
    if (better) {
      best_score = score;
      result.estimated = entry.location;
      first = false;
    }
  }
  return result;
}

double distance_error(const Location& estimated, const Location& truth) {
  return std::hypot(estimated.x_ft - truth.x_ft,
                    estimated.y_ft - truth.y_ft);
}

double classical_cosine_similarity(const AmplitudeVector& a,
                                   const AmplitudeVector& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument(
        "classical_cosine_similarity: dimensions do not match");
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    dot += a[i] * b[i];
  }
  return dot * dot;
}

ResourceCost resource_cost(int ap_count, int location_count) {
  if (ap_count < 1 || location_count < 1) {
    throw std::invalid_argument("resource_cost: counts must be >= 1");
  }
  int qubits_per_register = 1;
  while ((1 << qubits_per_register) < ap_count) {
    ++qubits_per_register;
  }
  return ResourceCost{
      2 * qubits_per_register + 1,
      static_cast<long>(location_count),
      static_cast<long>(ap_count) * static_cast<long>(location_count)};
}

}  // namespace qloc
