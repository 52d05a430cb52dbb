#include "qloc/experiments.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "qloc/csv_io.hpp"

namespace qloc {

namespace {

std::vector<double> localization_errors(const FingerprintDb& db,
                                        std::span<const TestSample> samples,
                                        const MatchMode& mode) {
  std::vector<double> errors;
  errors.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto result = localize(db, samples[i], mode, i);
    errors.push_back(distance_error(result.estimated, samples[i].truth));
  }
  return errors;
}

void check_inputs(const FingerprintDb& db,
                  std::span<const TestSample> samples) {
  if (db.size() == 0 || samples.empty()) {
    throw std::invalid_argument("experiment: empty database or sample set");
  }
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("median: empty input");
  }
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) {
    return values[mid];
  }
  return 0.5 * (values[mid - 1] + values[mid]);
}

SweepReport run_shot_sweep(const FingerprintDb& db,
                           std::span<const TestSample> samples,
                           std::span<const long> shot_list,
                           std::span<const std::uint64_t> seeds) {
  check_inputs(db, samples);
  if (shot_list.empty()) {
    throw std::invalid_argument("run_shot_sweep: empty shot list");
  }
  if (seeds.empty()) {
    throw std::invalid_argument("run_shot_sweep: empty seed list");
  }

  SweepReport report;
  for (long shots : shot_list) {
    std::vector<double> pooled;
    pooled.reserve(samples.size() * seeds.size());
    for (std::uint64_t seed : seeds) {
      const auto errors = localization_errors(
          db, samples, MatchMode::quantum_shots(shots, seed));
      pooled.insert(pooled.end(), errors.begin(), errors.end());
    }
    report.rows.push_back(SweepRow{shots, median(std::move(pooled))});
  }
  report.rows.push_back(SweepRow{
      std::nullopt,
      median(localization_errors(db, samples, MatchMode::quantum_exact()))});
  return report;
}

CdfReport run_cdf(const FingerprintDb& db, std::span<const TestSample> samples,
                  const MatchMode& mode) {
  check_inputs(db, samples);
  auto errors = localization_errors(db, samples, mode);
  std::sort(errors.begin(), errors.end());

  CdfReport report;
  report.rows.reserve(errors.size());
  const double n = static_cast<double>(errors.size());
  for (std::size_t i = 0; i < errors.size(); ++i) {
    report.rows.push_back(
        CdfRow{errors[i], static_cast<double>(i + 1) / n});
  }
  return report;
}

CompareReport run_compare(const FingerprintDb& db,
                          std::span<const TestSample> samples) {
  check_inputs(db, samples);

  CompareReport report;
  report.sample_count = samples.size();
  std::vector<double> classical_errors;
  std::vector<double> quantum_errors;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto classical =
        localize(db, samples[i], MatchMode::classical(), i);
    const auto quantum =
        localize(db, samples[i], MatchMode::quantum_exact(), i);
    if (classical.estimated.id == quantum.estimated.id) {
      ++report.agreements;
    }
    classical_errors.push_back(
        distance_error(classical.estimated, samples[i].truth));
    quantum_errors.push_back(
        distance_error(quantum.estimated, samples[i].truth));
  }
  report.agreement_rate = static_cast<double>(report.agreements) /
                          static_cast<double>(report.sample_count);
  report.classical_median_ft = median(std::move(classical_errors));
  report.quantum_median_ft = median(std::move(quantum_errors));
  return report;
}

void write_sweep_csv(const std::filesystem::path& path,
                     const SweepReport& report) {
  std::ofstream file(path);
  if (!file) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  file << "shots,median_error_ft\n";
  for (const auto& row : report.rows) {
    if (row.shots.has_value()) {
      file << *row.shots;
    } else {
      file << "inf";
    }
    file << ',' << format_value(row.median_error_ft) << '\n';
  }
}

void write_cdf_csv(const std::filesystem::path& path,
                   const CdfReport& report) {
  std::ofstream file(path);
  if (!file) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  file << "error_ft,cum_fraction\n";
  for (const auto& row : report.rows) {
    file << format_value(row.error_ft) << ','
         << format_value(row.cum_fraction) << '\n';
  }
}

}  // namespace qloc
