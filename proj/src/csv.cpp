#include "locwave/csv.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "locwave/errors.hpp"

namespace locwave::cli {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : path_(path), stream_(path, std::ios::binary), columns_(header.size()) {
  if (!stream_) throw_io("CsvWriter: cannot open " + path + " for writing");
  write_row(header);
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
  if (fields.size() != columns_) {
    throw_io("CsvWriter: row with " + std::to_string(fields.size()) +
             " fields in a " + std::to_string(columns_) + "-column file");
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) stream_ << ',';
    stream_ << fields[i];
  }
  stream_ << '\n';
  if (!stream_) throw_io("CsvWriter: write failed for " + path_);
}

std::vector<std::vector<double>> read_numeric_csv(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw_io("read_numeric_csv: cannot open " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream fields(line);
    std::string field;
    bool numeric = true;
    while (std::getline(fields, field, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(field, &used));
        while (used < field.size() && std::isspace(field[used])) ++used;
        if (used != field.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) break;
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;  // header row
      }
      throw_io("read_numeric_csv: non-numeric row in " + path);
    }
    first = false;
    if (!rows.empty() && rows.back().size() != row.size()) {
      throw_io("read_numeric_csv: ragged rows in " + path);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw_io("read_numeric_csv: no data rows in " + path);
  return rows;
}

}  // namespace locwave::cli
