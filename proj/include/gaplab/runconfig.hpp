// Run configuration shared by every CLI subcommand: parsed once, validated
// with messages that name the offending field, then handed to the command
// implementations.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/weights.hpp"

namespace gaplab {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& field, const std::string& why)
      : std::runtime_error("invalid config: " + field + ": " + why) {}
};

// Inclusive grid "start:end:count".
inline std::vector<Real> parse_grid(const std::string& text, int digits,
                                    const std::string& field) {
  auto c1 = text.find(':');
  auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ConfigError(field, "expected start:end:count, got '" + text + "'");
  Real start(0L, digits), end(0L, digits);
  long count = 0;
  try {
    start = Real::parse(text.substr(0, c1), digits);
    end = Real::parse(text.substr(c1 + 1, c2 - c1 - 1), digits);
    count = std::stol(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw ConfigError(field, "expected start:end:count, got '" + text + "'");
  }
  if (count < 1) throw ConfigError(field, "count must be >= 1");
  if (count > 1 && !(start < end)) throw ConfigError(field, "needs start < end for count > 1");
  std::vector<Real> grid;
  for (long i = 0; i < count; ++i) {
    grid.push_back(count == 1 ? start : start + (end - start) * i / (count - 1));
  }
  return grid;
}

inline std::vector<int> parse_int_list(const std::string& text, const std::string& field) {
  std::vector<int> out;
  size_t pos = 0;
  try {
    while (pos < text.size()) {
      size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      out.push_back(std::stoi(text.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  } catch (const std::exception&) {
    throw ConfigError(field, "expected a comma-separated integer list, got '" + text + "'");
  }
  if (out.empty()) throw ConfigError(field, "list is empty");
  return out;
}

struct RunConfig {
  std::string ensemble = "gue";  // gue | lue
  int n = 2;
  double alpha = 1.0;            // lue only
  std::optional<double> a, b;
  std::string a_grid, b_grid;    // start:end:count
  bool whole_support = false;
  int digits = 60;
  std::optional<double> fd_step;
  std::string scheme = "richardson4";
  double c = 0.7071067811865475244;  // edge-scaling constant
  double beta = 1.0;                 // lue alpha = beta n
  long trials = 100000;
  std::uint64_t seed = 1;
  std::string n_list = "4,8,16";
  std::string output;            // file path; empty = stdout
  std::string format;            // csv | json; empty = subcommand default
  int jmax = 8;
  int n_max = 6;
  int nodes = 192;
  int nystrom_nodes = 96;
  double smin = -6.0, smax = 4.0;
  int points = 101;
  double tol = 0.0;              // 0 = subcommand default
  std::string x_grid = "-2:2:5", y_grid = "-2:2:5";
  bool crosscheck = false;

  bool is_gue() const { return ensemble == "gue"; }

  WeightSpec weight() const {
    if (ensemble == "gue") return WeightSpec::gaussian();
    if (ensemble == "lue") {
      if (!(alpha > 0)) throw ConfigError("alpha", "must be > 0 for lue");
      return WeightSpec::laguerre(Real(alpha, digits));
    }
    throw ConfigError("ensemble", "must be 'gue' or 'lue', got '" + ensemble + "'");
  }

  Window window() const {
    if (whole_support) return Window::whole_support();
    if (!a || !b) throw ConfigError("a/b", "window endpoints required (or --whole-support)");
    Window win = Window::of(Real(*a, digits), Real(*b, digits));
    win.validate(weight());
    return win;
  }

  void check_common() const {
    if (digits < 30) throw ConfigError("digits", "must be >= 30");
    if (n < 1) throw ConfigError("n", "must be >= 1");
    if (ensemble != "gue" && ensemble != "lue")
      throw ConfigError("ensemble", "must be 'gue' or 'lue', got '" + ensemble + "'");
    if (format != "" && format != "csv" && format != "json")
      throw ConfigError("format", "must be 'csv' or 'json'");
    if (scheme != "central2" && scheme != "richardson4")
      throw ConfigError("scheme", "must be 'central2' or 'richardson4'");
  }
};

}  // namespace gaplab
