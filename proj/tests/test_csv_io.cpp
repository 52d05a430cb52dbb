#include "qloc/csv_io.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace qloc;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;
using Catch::Matchers::WithinAbs;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("qloc_test_" + name);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream file(path);
  file << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream file(path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("a hand-written row loads and encodes", "[csv]") {
  const auto path = temp_file("hand.csv");
  write_text(path, "loc_id,x_ft,y_ft,ap_1,ap_2\n1,10.0,5.0,-60,-40\n");

  const auto table = load_rss_table(path);
  REQUIRE(table.ap_count == 2);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].location.id == 1);
  CHECK(table.rows[0].location.x_ft == 10.0);
  CHECK(table.rows[0].location.y_ft == 5.0);

  const auto db = to_database(table, -100.0);
  CHECK_THAT(db.entries()[0].vector[0],
             WithinAbs(0.554700196225229, 1e-12));
  CHECK_THAT(db.entries()[0].vector[1],
             WithinAbs(0.832050294337844, 1e-12));
  fs::remove(path);
}

TEST_CASE("empty cells mean a missing AP", "[csv]") {
  const auto path = temp_file("missing.csv");
  write_text(path, "loc_id,x_ft,y_ft,ap_1,ap_2\n1,0,0,,-40\n");
  const auto table = load_rss_table(path);
  CHECK_FALSE(table.rows[0].rss.readings_dbm[0].has_value());
  REQUIRE(table.rows[0].rss.readings_dbm[1].has_value());

  const auto samples = to_samples(table, -100.0);
  CHECK(samples[0].vector[0] == 0.0);
  CHECK_THAT(samples[0].vector[1], WithinAbs(1.0, 1e-15));
  fs::remove(path);
}

TEST_CASE("parse errors name the offending row", "[csv]") {
  const auto path = temp_file("bad.csv");

  SECTION("ragged row") {
    write_text(path,
               "loc_id,x_ft,y_ft,ap_1,ap_2\n1,0,0,-60,-40\n2,0,0,-60,-40,"
               "-30\n");
    CHECK_THROWS_MATCHES(load_rss_table(path), CsvParseError,
                         MessageMatches(ContainsSubstring("row 3")));
  }

  SECTION("non-numeric cell") {
    write_text(path, "loc_id,x_ft,y_ft,ap_1,ap_2\n1,0,zero,-60,-40\n");
    CHECK_THROWS_MATCHES(load_rss_table(path), CsvParseError,
                         MessageMatches(ContainsSubstring("row 2")));
  }

  SECTION("trailing garbage in a numeric cell") {
    write_text(path, "loc_id,x_ft,y_ft,ap_1,ap_2\n1,0,0,-60dBm,-40\n");
    CHECK_THROWS_MATCHES(load_rss_table(path), CsvParseError,
                         MessageMatches(ContainsSubstring("row 2")));
  }

  SECTION("malformed header") {
    write_text(path, "id,x,y,ap_1\n1,0,0,-60\n");
    CHECK_THROWS_AS(load_rss_table(path), CsvParseError);
  }

  SECTION("no ap columns") {
    write_text(path, "loc_id,x_ft,y_ft\n1,0,0\n");
    CHECK_THROWS_AS(load_rss_table(path), CsvParseError);
  }

  SECTION("empty file") {
    write_text(path, "");
    CHECK_THROWS_AS(load_rss_table(path), CsvParseError);
  }

  fs::remove(path);
}

TEST_CASE("missing file reports its path", "[csv]") {
  CHECK_THROWS_MATCHES(load_rss_table("definitely_not_here.csv"),
                       std::runtime_error,
                       MessageMatches(ContainsSubstring("definitely_not_here.csv")));
}

TEST_CASE("save/load round trip is byte-stable", "[csv]") {
  TestbedConfig config;
  config.seed = 77;
  const auto testbed = generate_testbed(config);

  const auto first = temp_file("round1.csv");
  const auto second = temp_file("round2.csv");
  save_rss_table(first, testbed.train);
  const auto reloaded = load_rss_table(first);
  save_rss_table(second, reloaded);
  CHECK(read_text(first) == read_text(second));

  // and the reload parses to the exact same doubles the text shows
  const auto again = load_rss_table(second);
  for (std::size_t i = 0; i < reloaded.rows.size(); ++i) {
    CHECK(again.rows[i].location.x_ft == reloaded.rows[i].location.x_ft);
    CHECK(again.rows[i].rss.readings_dbm ==
          reloaded.rows[i].rss.readings_dbm);
  }
  fs::remove(first);
  fs::remove(second);
}

TEST_CASE("nine-significant-digit text is self-reproducing", "[csv]") {
  std::mt19937_64 gen(83);
  std::uniform_real_distribution<double> value(-120.0, 120.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string text = format_value(value(gen));
    CHECK(format_value(std::stod(text)) == text);
  }
  CHECK(format_value(-60.0) == "-60");
  CHECK(format_value(0.5547001962) == "0.554700196");
}

TEST_CASE("row reading count must match the header", "[csv]") {
  RssTable table;
  table.ap_count = 3;
  table.rows.push_back(RssRecord{Location{1, 0.0, 0.0},
                                 RawRssVector{{-60.0, -50.0}}});
  CHECK_THROWS_AS(save_rss_table(temp_file("short.csv"), table),
                  std::invalid_argument);
  fs::remove(temp_file("short.csv"));
}
