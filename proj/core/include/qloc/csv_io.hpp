#ifndef QLOC_CSV_IO_HPP
#define QLOC_CSV_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "qloc/fingerprint.hpp"
#include "qloc/testbed.hpp"

namespace qloc {

// Malformed header, ragged row, or non-numeric cell; the message names
// the offending row.
class CsvParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Schema: "loc_id,x_ft,y_ft,ap_1,...,ap_N"; dBm floats, empty cell =
// missing AP. The same schema serves fingerprints and test samples.
RssTable load_rss_table(const std::filesystem::path& path);
void save_rss_table(const std::filesystem::path& path, const RssTable& table);

// Load-and-encode conveniences.
FingerprintDb load_fingerprints(const std::filesystem::path& path,
                                double floor_dbm);
std::vector<TestSample> load_samples(const std::filesystem::path& path,
                                     double floor_dbm);

// Numbers are serialized with 9 significant digits; a value parsed back
// from that text reproduces the same text, so save/load round trips are
// byte-stable.
std::string format_value(double value);

}  // namespace qloc

#endif  // QLOC_CSV_IO_HPP
