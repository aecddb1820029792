// Formatting and CSV plumbing shared by the exporters and the CLI.
//
// High-precision values are emitted as decimal strings with digits-aware
// significant figures, capped at 30 so files stay human-diffable. CSV parsing
// keeps the raw cell text, which makes parse -> re-emit byte-identical.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gaplab/real.hpp"

namespace gaplab {

inline int output_figures(int digits) { return std::min(digits, 30); }

inline std::string format_real(const Real& x, int digits) {
  return x.str(output_figures(digits));
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string emit() const {
    std::ostringstream out;
    auto join = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
      }
      out << '\n';
    };
    join(header);
    for (const auto& r : rows) join(r);
    return out.str();
  }

  static CsvTable parse(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::vector<std::string> cells;
      std::string cell;
      std::istringstream ls(line);
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      if (!line.empty() && line.back() == ',') cells.push_back("");
      if (first) {
        t.header = cells;
        first = false;
      } else {
        t.rows.push_back(cells);
      }
    }
    return t;
  }
};

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

}  // namespace gaplab
