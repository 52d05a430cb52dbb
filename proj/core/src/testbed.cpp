#include "qloc/testbed.hpp"

#include <cmath>
#include <stdexcept>

#include "qloc/rng.hpp"

namespace qloc {

namespace {

// Stream ids for the generator's independent draw sequences.
constexpr std::uint64_t kTrainLayoutStream = 1;
constexpr std::uint64_t kTestLayoutStream = 2;
constexpr std::uint64_t kTrainNoiseStream = 3;
constexpr std::uint64_t kTestNoiseStream = 4;

std::pair<double, double> perimeter_point(double arclength, double w,
                                          double h) {
  if (arclength < w) {
    return {arclength, 0.0};
  }
  arclength -= w;
  if (arclength < h) {
    return {w, arclength};
  }
  arclength -= h;
  if (arclength < w) {
    return {w - arclength, h};
  }
  arclength -= w;
  return {0.0, arclength};
}

RssTable survey(const TestbedConfig& config,
                const std::vector<std::pair<double, double>>& aps,
                std::uint64_t layout_stream, std::uint64_t noise_stream) {
  const bool is_train = layout_stream == kTrainLayoutStream;
  const int count = is_train ? config.train_count : config.test_count;

  RngStream layout(config.seed, layout_stream);
  RngStream noise(config.seed, noise_stream);

  RssTable table;
  table.ap_count = config.ap_count;
  table.rows.reserve(count);
  for (int i = 0; i < count; ++i) {
    RssRecord record;
    record.location = Location{i + 1, layout.uniform(0.0, config.area_x_ft),
                               layout.uniform(0.0, config.area_y_ft)};
    record.rss.readings_dbm.reserve(aps.size());
    for (const auto& [ap_x, ap_y] : aps) {
      const double d = std::hypot(record.location.x_ft - ap_x,
                                  record.location.y_ft - ap_y);
      double rss = config.tx_power_at_1ft_dbm -
                   10.0 * config.path_loss_exponent *
                       std::log10(std::max(d, 1.0)) +
                   noise.normal(0.0, config.shadowing_sigma_db);
      record.rss.readings_dbm.push_back(
          std::max(rss, config.rss_floor_dbm));
    }
    table.rows.push_back(std::move(record));
  }
  return table;
}

}  // namespace

void TestbedConfig::validate() const {
  if (!(area_x_ft > 0.0) || !(area_y_ft > 0.0)) {
    throw std::invalid_argument("TestbedConfig: area must be positive");
  }
  if (ap_count < 1) {
    throw std::invalid_argument("TestbedConfig: ap_count must be >= 1");
  }
  if (train_count < 1 || test_count < 1) {
    throw std::invalid_argument(
        "TestbedConfig: train and test counts must be >= 1");
  }
  if (!(path_loss_exponent > 0.0)) {
    throw std::invalid_argument(
        "TestbedConfig: path-loss exponent must be positive");
  }
  if (!(shadowing_sigma_db >= 0.0)) {
    throw std::invalid_argument(
        "TestbedConfig: shadowing sigma must be >= 0");
  }
  if (!(rss_floor_dbm < tx_power_at_1ft_dbm)) {
    throw std::invalid_argument(
        "TestbedConfig: floor must lie below the 1ft transmit power");
  }
}

std::vector<std::pair<double, double>> ap_positions(
    const TestbedConfig& config) {
  const double w = config.area_x_ft;
  const double h = config.area_y_ft;
  const std::vector<std::pair<double, double>> corners = {
      {0.0, 0.0}, {w, 0.0}, {w, h}, {0.0, h}};

  std::vector<std::pair<double, double>> aps;
  aps.reserve(config.ap_count);
  for (int i = 0; i < std::min(config.ap_count, 4); ++i) {
    aps.push_back(corners[i]);
  }
  const int extra = config.ap_count - 4;
  const double perimeter = 2.0 * (w + h);
  for (int j = 0; j < extra; ++j) {
    // Evenly spaced extras; an even comb can still land on a corner
    // (half the perimeter from a corner is the opposite corner), so
    // nudge forward until the spot is free.
    double arclength = perimeter * (2 * j + 1) / (2.0 * extra);
    auto taken = [&](const std::pair<double, double>& p) {
      for (const auto& ap : aps) {
        if (std::hypot(ap.first - p.first, ap.second - p.second) < 1e-6) {
          return true;
        }
      }
      return false;
    };
    auto point = perimeter_point(arclength, w, h);
    while (taken(point)) {
      arclength = std::fmod(arclength + perimeter / (8.0 * extra + 8.0),
                            perimeter);
      point = perimeter_point(arclength, w, h);
    }
    aps.push_back(point);
  }
  return aps;
}

Testbed generate_testbed(const TestbedConfig& config) {
  config.validate();
  const auto aps = ap_positions(config);
  Testbed testbed{config, {}, {}};
  testbed.train = survey(config, aps, kTrainLayoutStream, kTrainNoiseStream);
  testbed.test = survey(config, aps, kTestLayoutStream, kTestNoiseStream);
  return testbed;
}

FingerprintDb to_database(const RssTable& table, double floor_dbm) {
  std::vector<FingerprintEntry> entries;
  entries.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    entries.push_back(
        FingerprintEntry{row.location, rss_to_amplitudes(row.rss, floor_dbm)});
  }
  return FingerprintDb(table.ap_count, std::move(entries));
}

std::vector<TestSample> to_samples(const RssTable& table, double floor_dbm) {
  std::vector<TestSample> samples;
  samples.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    samples.push_back(
        TestSample{row.location, rss_to_amplitudes(row.rss, floor_dbm)});
  }
  return samples;
}

}  // namespace qloc
