// Minimal RFC-4180-style CSV writer: header row, %.17g numeric cells so that
// identical runs produce identical bytes.
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace slab {

inline std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
      : os_(path) {
    if (!os_) throw std::runtime_error("csv: cannot open " + path.string());
    write_cells(header);
  }

  void row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(csv_number(v));
    write_cells(cells);
  }

  void row(const std::vector<std::string>& cells) { write_cells(cells); }

 private:
  void write_cells(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os_ << ',';
      os_ << cells[i];
    }
    os_ << "\r\n";
  }

  std::ofstream os_;
};

}  // namespace slab
