#ifndef QLOC_TESTBED_HPP
#define QLOC_TESTBED_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qloc/encoding.hpp"
#include "qloc/fingerprint.hpp"

namespace qloc {

// Synthetic deployment standing in for a real survey: a rectangular floor
// with wall-mounted APs, log-distance path loss, and Gaussian shadowing.
struct TestbedConfig {
  double area_x_ft = 89.0;
  double area_y_ft = 56.0;
  int ap_count = 4;
  int train_count = 24;     // fingerprint locations
  int test_count = 24;
  double path_loss_exponent = 3.0;
  double tx_power_at_1ft_dbm = -30.0;
  double shadowing_sigma_db = 4.0;
  double rss_floor_dbm = -100.0;
  std::uint64_t seed = 42;

  void validate() const;  // throws std::invalid_argument on bad values
};

// One surveyed point: coordinates plus the raw dBm scan, as it would sit
// in a CSV row.
struct RssRecord {
  Location location;
  RawRssVector rss;
};

struct RssTable {
  int ap_count = 0;
  std::vector<RssRecord> rows;
};

struct Testbed {
  TestbedConfig config;
  RssTable train;
  RssTable test;
};

// Deterministic per seed: AP positions are fixed by the geometry, survey
// points are drawn uniformly over the area, and RSS follows
// tx_power_at_1ft - 10*gamma*log10(max(d, 1)) + N(0, sigma), clipped
// below at the floor.
Testbed generate_testbed(const TestbedConfig& config);

// AP positions used by the generator: the four corners first, extra APs
// spread evenly along the perimeter.
std::vector<std::pair<double, double>> ap_positions(
    const TestbedConfig& config);

// Amplitude-encode a raw table against the given floor.
FingerprintDb to_database(const RssTable& table, double floor_dbm);
std::vector<TestSample> to_samples(const RssTable& table, double floor_dbm);

}  // namespace qloc

#endif  // QLOC_TESTBED_HPP
