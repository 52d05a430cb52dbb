#ifndef QLOC_EXPERIMENTS_HPP
#define QLOC_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "qloc/fingerprint.hpp"

namespace qloc {

// Shot-budget sweep: localization error as a function of the number of
// circuit repetitions, with an exact-simulation reference row (shots
// absent, serialized as "inf").
struct SweepRow {
  std::optional<long> shots;
  double median_error_ft;
};

struct SweepReport {
  std::vector<SweepRow> rows;
};

// For each shot count: localize every sample under every seed and take
// the median distance error over the pooled (sample, seed) runs.
SweepReport run_shot_sweep(const FingerprintDb& db,
                           std::span<const TestSample> samples,
                           std::span<const long> shot_list,
                           std::span<const std::uint64_t> seeds);

// Empirical CDF of localization error: sorted errors with cumulative
// fractions i/n, ending at 1.
struct CdfRow {
  double error_ft;
  double cum_fraction;
};

struct CdfReport {
  std::vector<CdfRow> rows;
};

CdfReport run_cdf(const FingerprintDb& db, std::span<const TestSample> samples,
                  const MatchMode& mode);

// Classical vs exact-quantum matching side by side.
struct CompareReport {
  std::size_t sample_count = 0;
  std::size_t agreements = 0;  // samples where both picked one location
  double agreement_rate = 0.0;
  double classical_median_ft = 0.0;
  double quantum_median_ft = 0.0;
};

CompareReport run_compare(const FingerprintDb& db,
                          std::span<const TestSample> samples);

void write_sweep_csv(const std::filesystem::path& path,
                     const SweepReport& report);
void write_cdf_csv(const std::filesystem::path& path,
                   const CdfReport& report);

double median(std::vector<double> values);

}  // namespace qloc

#endif  // QLOC_EXPERIMENTS_HPP
