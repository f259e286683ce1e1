#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace locwave::cli {

// Doubles serialized with 17 significant digits round-trip exactly and make
// repeated runs byte-comparable.
std::string format_double(double value);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void write_row(const std::vector<std::string>& fields);
  const std::string& path() const { return path_; }
  std::size_t columns() const { return columns_; }

 private:
  std::string path_;
  std::ofstream stream_;
  std::size_t columns_;
};

// Numeric table reader for gridded inputs (wavefunctions, spectra). Skips
// one leading header row when it is not numeric; rejects ragged rows.
std::vector<std::vector<double>> read_numeric_csv(const std::string& path);

}  // namespace locwave::cli
