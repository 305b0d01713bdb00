#pragma once

// Minimal SVG line-chart writer: one polyline per series, linear or log10
// y axis, tick labels. Enough to eyeball convergence curves without pulling
// in a plotting stack.

#include <filesystem>
#include <string>
#include <vector>

namespace ijt::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  int width = 760;
  int height = 480;
};

void write_line_chart(const std::filesystem::path& path,
                      const std::vector<Series>& series, const ChartOptions& opt);

}  // namespace ijt::svg
