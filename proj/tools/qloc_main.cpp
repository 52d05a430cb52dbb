// qloc: swap-test fingerprint localization at the command line.
//
// Subcommands: gen, localize, sweep, cdf, compare, swap-test. Every run
// with the same flags and seed writes byte-identical output.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qloc/csv_io.hpp"
#include "qloc/encoding.hpp"
#include "qloc/experiments.hpp"
#include "qloc/fingerprint.hpp"
#include "qloc/swap_test.hpp"
#include "qloc/testbed.hpp"

namespace {

namespace fs = std::filesystem;

std::uint64_t fallback_seed() {
  if (const char* env = std::getenv("QLOC_SEED")) {
    return std::stoull(env);
  }
  return 42;
}

std::vector<double> parse_components(const std::string& csv) {
  std::vector<double> values;
  std::stringstream stream(csv);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    values.push_back(std::stod(cell));
  }
  return values;
}

std::ostream& open_sink(std::ofstream& file,
                        const std::optional<std::string>& out_dir,
                        const std::string& name) {
  if (!out_dir.has_value()) {
    return std::cout;
  }
  fs::create_directories(*out_dir);
  const fs::path path = fs::path(*out_dir) / name;
  file.open(path);
  if (!file) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  return file;
}

struct DataFlags {
  std::string db_path;
  std::string samples_path;
  double floor_dbm = -100.0;

  void attach(CLI::App& cmd) {
    cmd.add_option("--db", db_path, "fingerprints CSV")->required();
    cmd.add_option("--samples", samples_path, "test samples CSV")
        ->required();
    cmd.add_option("--floor", floor_dbm, "RSS floor in dBm")->capture_default_str();
  }
};

int cmd_gen(const qloc::TestbedConfig& config, const std::string& out_dir) {
  const auto testbed = qloc::generate_testbed(config);
  fs::create_directories(out_dir);
  qloc::save_rss_table(fs::path(out_dir) / "fingerprints.csv",
                       testbed.train);
  qloc::save_rss_table(fs::path(out_dir) / "samples.csv", testbed.test);
  std::cerr << "wrote " << testbed.train.rows.size() << " fingerprints, "
            << testbed.test.rows.size() << " samples to " << out_dir
            << "\n";
  return 0;
}

int cmd_localize(const DataFlags& data, const std::string& mode_name,
                 long shots, std::uint64_t seed,
                 const std::optional<std::string>& out_dir) {
  const auto db = qloc::load_fingerprints(data.db_path, data.floor_dbm);
  const auto samples = qloc::load_samples(data.samples_path, data.floor_dbm);

  qloc::MatchMode mode = qloc::MatchMode::quantum_exact();
  if (mode_name == "shots") {
    mode = qloc::MatchMode::quantum_shots(shots, seed);
  } else if (mode_name == "classical") {
    mode = qloc::MatchMode::classical();
  }

  std::ofstream file;
  std::ostream& out = open_sink(file, out_dir, "localization.csv");
  out << "sample_id,true_x_ft,true_y_ft,est_loc_id,est_x_ft,est_y_ft,"
         "error_ft,best_score\n";
  std::vector<double> errors;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto result = qloc::localize(db, samples[i], mode, i);
    const double error =
        qloc::distance_error(result.estimated, samples[i].truth);
    errors.push_back(error);
    const double best =
        *std::max_element(result.scores.begin(), result.scores.end());
    out << samples[i].truth.id << ','
        << qloc::format_value(samples[i].truth.x_ft) << ','
        << qloc::format_value(samples[i].truth.y_ft) << ','
        << result.estimated.id << ','
        << qloc::format_value(result.estimated.x_ft) << ','
        << qloc::format_value(result.estimated.y_ft) << ','
        << qloc::format_value(error) << ',' << qloc::format_value(best)
        << '\n';
  }
  std::cerr << "median_error_ft=" << qloc::format_value(qloc::median(errors))
            << "\n";
  return 0;
}

int cmd_sweep(const DataFlags& data, const std::vector<long>& shot_list,
              std::uint64_t seed, int seed_count,
              const std::optional<std::string>& out_dir) {
  const auto db = qloc::load_fingerprints(data.db_path, data.floor_dbm);
  const auto samples = qloc::load_samples(data.samples_path, data.floor_dbm);

  std::vector<std::uint64_t> seeds(seed_count);
  std::iota(seeds.begin(), seeds.end(), seed);
  const auto report = qloc::run_shot_sweep(db, samples, shot_list, seeds);

  if (out_dir.has_value()) {
    fs::create_directories(*out_dir);
    qloc::write_sweep_csv(fs::path(*out_dir) / "sweep.csv", report);
    return 0;
  }
  std::cout << "shots,median_error_ft\n";
  for (const auto& row : report.rows) {
    if (row.shots.has_value()) {
      std::cout << *row.shots;
    } else {
      std::cout << "inf";
    }
    std::cout << ',' << qloc::format_value(row.median_error_ft) << '\n';
  }
  return 0;
}

int cmd_cdf(const DataFlags& data, const std::string& mode_name, long shots,
            std::uint64_t seed, const std::optional<std::string>& out_dir) {
  const auto db = qloc::load_fingerprints(data.db_path, data.floor_dbm);
  const auto samples = qloc::load_samples(data.samples_path, data.floor_dbm);

  qloc::MatchMode mode = qloc::MatchMode::quantum_exact();
  if (mode_name == "shots") {
    mode = qloc::MatchMode::quantum_shots(shots, seed);
  } else if (mode_name == "classical") {
    mode = qloc::MatchMode::classical();
  }
  const auto report = qloc::run_cdf(db, samples, mode);

  if (out_dir.has_value()) {
    fs::create_directories(*out_dir);
    qloc::write_cdf_csv(fs::path(*out_dir) / "cdf.csv", report);
    return 0;
  }
  std::cout << "error_ft,cum_fraction\n";
  for (const auto& row : report.rows) {
    std::cout << qloc::format_value(row.error_ft) << ','
              << qloc::format_value(row.cum_fraction) << '\n';
  }
  return 0;
}

int cmd_compare(const DataFlags& data) {
  const auto db = qloc::load_fingerprints(data.db_path, data.floor_dbm);
  const auto samples = qloc::load_samples(data.samples_path, data.floor_dbm);
  const auto report = qloc::run_compare(db, samples);
  std::cout << "samples=" << report.sample_count << '\n'
            << "agreements=" << report.agreements << '\n'
            << "agreement_rate=" << qloc::format_value(report.agreement_rate)
            << '\n'
            << "classical_median_ft="
            << qloc::format_value(report.classical_median_ft) << '\n'
            << "quantum_median_ft="
            << qloc::format_value(report.quantum_median_ft) << '\n';
  return 0;
}

int cmd_swap_test(const std::string& psi_csv, const std::string& phi_csv,
                  bool exact, long shots, std::uint64_t seed) {
  const auto psi = qloc::AmplitudeVector::from_components(
      parse_components(psi_csv));
  const auto phi = qloc::AmplitudeVector::from_components(
      parse_components(phi_csv));

  if (exact) {
    const double p1 = qloc::exact_match_probability(psi, phi);
    std::cout << "p1=" << qloc::format_value(p1) << '\n'
              << "similarity="
              << qloc::format_value(qloc::exact_similarity(psi, phi))
              << '\n';
    return 0;
  }
  qloc::RngStream rng(seed, 0);
  const auto estimate = qloc::estimate_similarity(psi, phi, shots, rng);
  std::cout << "shots=" << estimate.shots << '\n'
            << "ones=" << estimate.ones_count << '\n'
            << "similarity=" << qloc::format_value(estimate.value) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swap-test RSS fingerprint localization"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed may follow the subcommand

  std::uint64_t seed = fallback_seed();
  app.add_option("--seed", seed, "RNG seed (env QLOC_SEED as fallback)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic testbed");
  qloc::TestbedConfig config;
  std::string gen_out = "testbed";
  gen->add_option("--out", gen_out, "output directory")->capture_default_str();
  gen->add_option("--area-x", config.area_x_ft, "floor width, ft")->capture_default_str();
  gen->add_option("--area-y", config.area_y_ft, "floor depth, ft")->capture_default_str();
  gen->add_option("--aps", config.ap_count, "number of access points")->capture_default_str();
  gen->add_option("--train", config.train_count, "fingerprint locations")->capture_default_str();
  gen->add_option("--test", config.test_count, "test locations")->capture_default_str();
  gen->add_option("--gamma", config.path_loss_exponent,
                  "path-loss exponent")->capture_default_str();
  gen->add_option("--tx-power", config.tx_power_at_1ft_dbm,
                  "transmit power at 1 ft, dBm")->capture_default_str();
  gen->add_option("--sigma", config.shadowing_sigma_db,
                  "shadowing sigma, dB")->capture_default_str();
  gen->add_option("--floor", config.rss_floor_dbm, "RSS floor, dBm")->capture_default_str();

  // localize
  auto* loc = app.add_subcommand("localize", "match samples against a db");
  DataFlags loc_data;
  loc_data.attach(*loc);
  std::string loc_mode = "exact";
  long loc_shots = 4096;
  std::optional<std::string> loc_out;
  loc->add_option("--mode", loc_mode, "exact|shots|classical")->capture_default_str()
      ->check(CLI::IsMember({"exact", "shots", "classical"}));
  loc->add_option("--shots", loc_shots, "shots per comparison")->capture_default_str();
  loc->add_option("--out", loc_out, "output directory");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "median error vs shot budget");
  DataFlags sweep_data;
  sweep_data.attach(*sweep);
  std::vector<long> shot_list = {16, 64, 256, 1024, 4096, 16384};
  int seed_count = 20;
  std::optional<std::string> sweep_out;
  sweep->add_option("--shot-list", shot_list, "shot counts to sweep")
      ->delimiter(',');
  sweep->add_option("--seeds", seed_count, "number of consecutive seeds")
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "output directory");

  // cdf
  auto* cdf = app.add_subcommand("cdf", "localization error CDF");
  DataFlags cdf_data;
  cdf_data.attach(*cdf);
  std::string cdf_mode = "exact";
  long cdf_shots = 4096;
  std::optional<std::string> cdf_out;
  cdf->add_option("--mode", cdf_mode, "exact|shots|classical")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "shots", "classical"}));
  cdf->add_option("--shots", cdf_shots, "shots per comparison")
      ->capture_default_str();
  cdf->add_option("--out", cdf_out, "output directory");

  // compare
  auto* compare =
      app.add_subcommand("compare", "classical vs exact quantum matching");
  DataFlags compare_data;
  compare_data.attach(*compare);

  // swap-test
  auto* swap =
      app.add_subcommand("swap-test", "similarity of two explicit vectors");
  std::string psi_csv;
  std::string phi_csv;
  bool exact = false;
  long swap_shots = 4096;
  swap->add_option("--psi", psi_csv, "test vector, comma-separated")
      ->required();
  swap->add_option("--phi", phi_csv, "fingerprint vector, comma-separated")
      ->required();
  swap->add_flag("--exact", exact, "exact simulation instead of sampling");
  swap->add_option("--shots", swap_shots, "shots when sampling")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      config.seed = seed;
      return cmd_gen(config, gen_out);
    }
    if (loc->parsed()) {
      return cmd_localize(loc_data, loc_mode, loc_shots, seed, loc_out);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_data, shot_list, seed, seed_count, sweep_out);
    }
    if (cdf->parsed()) {
      return cmd_cdf(cdf_data, cdf_mode, cdf_shots, seed, cdf_out);
    }
    if (compare->parsed()) {
      return cmd_compare(compare_data);
    }
    if (swap->parsed()) {
      return cmd_swap_test(psi_csv, phi_csv, exact, swap_shots, seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
