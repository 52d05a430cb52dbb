// End-to-end checks of the qloc binary (path injected via QLOC_CLI).

#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const fs::path out_path =
      fs::temp_directory_path() / "qloc_cli_stdout.txt";
  const fs::path err_path =
      fs::temp_directory_path() / "qloc_cli_stderr.txt";
  const std::string command = std::string(QLOC_CLI) + " " + args + " >" +
                              out_path.string() + " 2>" + err_path.string();
  const int status = std::system(command.c_str());

  auto slurp = [](const fs::path& p) {
    std::ifstream file(p);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  };
  RunResult result{WEXITSTATUS(status), slurp(out_path), slurp(err_path)};
  fs::remove(out_path);
  fs::remove(err_path);
  return result;
}

std::string slurp_file(const fs::path& p) {
  std::ifstream file(p);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

double parse_field(const std::string& text, const std::string& key) {
  const auto pos = text.find(key + "=");
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + key.size() + 1));
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qloc_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("swap-test prints the two-AP example scores", "[cli]") {
  const auto result =
      run_cli("swap-test --psi 0.39,0.92 --phi 0.24,0.97 --exact");
  REQUIRE(result.exit_code == 0);
  CHECK_THAT(parse_field(result.out, "p1"), WithinAbs(0.014, 5e-4));
  CHECK_THAT(parse_field(result.out, "similarity"),
             WithinAbs(0.972, 5e-4));
}

TEST_CASE("swap-test sampling respects the seed", "[cli]") {
  const auto a = run_cli(
      "swap-test --psi 0.39,0.92 --phi 0.24,0.97 --shots 4096 --seed 5");
  const auto b = run_cli(
      "swap-test --psi 0.39,0.92 --phi 0.24,0.97 --shots 4096 --seed 5");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_THAT(parse_field(a.out, "similarity"), WithinAbs(0.972, 0.03));
}

TEST_CASE("swap-test rejects an unnormalized vector", "[cli]") {
  const auto result =
      run_cli("swap-test --psi 5,5 --phi 0.6,0.8 --exact");
  CHECK(result.exit_code != 0);
  CHECK_THAT(result.err, ContainsSubstring("unit norm"));
}

TEST_CASE("gen writes byte-identical testbeds per seed", "[cli]") {
  const auto dir_a = scratch_dir("gen_a");
  const auto dir_b = scratch_dir("gen_b");
  REQUIRE(run_cli("gen --seed 42 --out " + dir_a.string()).exit_code == 0);
  REQUIRE(run_cli("gen --seed 42 --out " + dir_b.string()).exit_code == 0);

  CHECK(slurp_file(dir_a / "fingerprints.csv") ==
        slurp_file(dir_b / "fingerprints.csv"));
  CHECK(slurp_file(dir_a / "samples.csv") ==
        slurp_file(dir_b / "samples.csv"));

  const auto dir_c = scratch_dir("gen_c");
  REQUIRE(run_cli("gen --seed 43 --out " + dir_c.string()).exit_code == 0);
  CHECK(slurp_file(dir_a / "fingerprints.csv") !=
        slurp_file(dir_c / "fingerprints.csv"));

  // QLOC_SEED env var stands in for --seed
  const auto dir_d = scratch_dir("gen_d");
  const std::string env_cmd = "QLOC_SEED=42 " + std::string(QLOC_CLI) +
                              " gen --out " + dir_d.string() +
                              " >/dev/null 2>&1";
  REQUIRE(std::system(env_cmd.c_str()) == 0);
  CHECK(slurp_file(dir_a / "fingerprints.csv") ==
        slurp_file(dir_d / "fingerprints.csv"));

  for (const auto& dir : {dir_a, dir_b, dir_c, dir_d}) {
    fs::remove_all(dir);
  }
}

TEST_CASE("localize, sweep, cdf and compare run on generated data",
          "[cli]") {
  const auto dir = scratch_dir("pipeline");
  REQUIRE(run_cli("gen --seed 7 --train 8 --test 8 --out " + dir.string())
              .exit_code == 0);
  const std::string data_flags = " --db " + (dir / "fingerprints.csv").string() +
                                 " --samples " + (dir / "samples.csv").string();

  SECTION("localize exact emits one row per sample") {
    const auto result = run_cli("localize" + data_flags + " --mode exact");
    REQUIRE(result.exit_code == 0);
    CHECK_THAT(result.out, ContainsSubstring("sample_id,"));
    CHECK(std::count(result.out.begin(), result.out.end(), '\n') == 9);
    CHECK_THAT(result.err, ContainsSubstring("median_error_ft="));
  }

  SECTION("localize shots is deterministic per seed") {
    const auto a = run_cli("localize" + data_flags +
                           " --mode shots --shots 256 --seed 3");
    const auto b = run_cli("localize" + data_flags +
                           " --mode shots --shots 256 --seed 3");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }

  SECTION("sweep table carries the exact reference row") {
    const auto result = run_cli("sweep" + data_flags +
                                " --shot-list 16,256 --seeds 3 --seed 1");
    REQUIRE(result.exit_code == 0);
    CHECK_THAT(result.out, ContainsSubstring("shots,median_error_ft\n16,"));
    CHECK_THAT(result.out, ContainsSubstring("\ninf,"));
  }

  SECTION("sweep --out writes the table into the directory") {
    REQUIRE(run_cli("sweep" + data_flags +
                    " --shot-list 16 --seeds 2 --seed 1 --out " +
                    dir.string())
                .exit_code == 0);
    CHECK_THAT(slurp_file(dir / "sweep.csv"),
               ContainsSubstring("shots,median_error_ft"));
  }

  SECTION("classical and exact cdf tables are identical") {
    const auto classical = run_cli("cdf" + data_flags + " --mode classical");
    const auto quantum = run_cli("cdf" + data_flags + " --mode exact");
    REQUIRE(classical.exit_code == 0);
    CHECK(classical.out == quantum.out);
    CHECK_THAT(classical.out, ContainsSubstring("error_ft,cum_fraction"));
  }

  SECTION("compare reports the agreement rate") {
    const auto result = run_cli("compare" + data_flags);
    REQUIRE(result.exit_code == 0);
    CHECK(parse_field(result.out, "agreement_rate") == 1.0);
  }

  fs::remove_all(dir);
}

TEST_CASE("missing input file fails with a message", "[cli]") {
  const auto result = run_cli(
      "localize --db missing.csv --samples also_missing.csv --mode exact");
  CHECK(result.exit_code != 0);
  CHECK_THAT(result.err, ContainsSubstring("missing.csv"));
}

TEST_CASE("unknown flags are rejected", "[cli]") {
  CHECK(run_cli("localize --frobnicate").exit_code != 0);
  CHECK(run_cli("no-such-command").exit_code != 0);
}
