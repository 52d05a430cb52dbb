#include "qloc/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace qloc {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream stream(line);
  while (std::getline(stream, cell, ',')) {
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    cells.emplace_back();
  }
  return cells;
}

double parse_number(const std::string& cell, std::size_t row,
                    const char* what) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(cell, &consumed);
  } catch (const std::exception&) {
    throw CsvParseError("row " + std::to_string(row) + ": " + what +
                        " is not numeric: '" + cell + "'");
  }
  if (consumed != cell.size()) {
    throw CsvParseError("row " + std::to_string(row) + ": " + what +
                        " has trailing characters: '" + cell + "'");
  }
  return value;
}

std::string expected_header(int ap_count) {
  std::string header = "loc_id,x_ft,y_ft";
  for (int i = 1; i <= ap_count; ++i) {
    header += ",ap_" + std::to_string(i);
  }
  return header;
}

}  // namespace

std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

RssTable load_rss_table(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }

  std::string line;
  if (!std::getline(file, line)) {
    throw CsvParseError("'" + path.string() + "': empty file, header "
                        "expected");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  const auto header = split_line(line);
  const int ap_count = static_cast<int>(header.size()) - 3;
  if (ap_count < 1 || line != expected_header(ap_count)) {
    throw CsvParseError(
        "'" + path.string() +
        "': malformed header, expected loc_id,x_ft,y_ft,ap_1,...,ap_N");
  }

  RssTable table;
  table.ap_count = ap_count;
  std::size_t row = 1;
  while (std::getline(file, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const auto cells = split_line(line);
    if (cells.size() != header.size()) {
      throw CsvParseError("row " + std::to_string(row) + ": expected " +
                          std::to_string(header.size()) + " cells, got " +
                          std::to_string(cells.size()));
    }
    RssRecord record;
    record.location.id =
        static_cast<int>(parse_number(cells[0], row, "loc_id"));
    record.location.x_ft = parse_number(cells[1], row, "x_ft");
    record.location.y_ft = parse_number(cells[2], row, "y_ft");
    record.rss.readings_dbm.reserve(ap_count);
    for (int i = 0; i < ap_count; ++i) {
      const std::string& cell = cells[3 + i];
      if (cell.empty()) {
        record.rss.readings_dbm.push_back(std::nullopt);
      } else {
        record.rss.readings_dbm.push_back(
            parse_number(cell, row, "ap reading"));
      }
    }
    table.rows.push_back(std::move(record));
  }
  return table;
}

void save_rss_table(const std::filesystem::path& path,
                    const RssTable& table) {
  std::ofstream file(path);
  if (!file) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  file << expected_header(table.ap_count) << '\n';
  for (const auto& row : table.rows) {
    if (row.rss.readings_dbm.size() !=
        static_cast<std::size_t>(table.ap_count)) {
      throw std::invalid_argument(
          "save_rss_table: row reading count does not match ap_count");
    }
    file << row.location.id << ',' << format_value(row.location.x_ft) << ','
         << format_value(row.location.y_ft);
    for (const auto& reading : row.rss.readings_dbm) {
      file << ',';
      if (reading.has_value()) {
        file << format_value(*reading);
      }
    }
    file << '\n';
  }
}

FingerprintDb load_fingerprints(const std::filesystem::path& path,
                                double floor_dbm) {
  return to_database(load_rss_table(path), floor_dbm);
}

std::vector<TestSample> load_samples(const std::filesystem::path& path,
                                     double floor_dbm) {
  return to_samples(load_rss_table(path), floor_dbm);
}

}  // namespace qloc
