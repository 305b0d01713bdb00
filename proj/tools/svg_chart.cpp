#include "svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ijt::svg {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

void write_line_chart(const std::filesystem::path& path,
                      const std::vector<Series>& series, const ChartOptions& opt) {
  const double ml = 70, mr = 20, mt = 40, mb = 55;
  const double pw = opt.width - ml - mr, ph = opt.height - mt - mb;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      double yv = s.y[i];
      if (opt.log_y) {
        if (!(yv > 0.0)) continue;
        yv = std::log10(yv);
      }
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, yv);
      ymax = std::max(ymax, yv);
    }
  }
  if (!(xmin <= xmax)) throw std::invalid_argument("write_line_chart: no drawable data");
  if (xmin == xmax) { xmin -= 0.5; xmax += 0.5; }
  if (ymin == ymax) { ymin -= 0.5; ymax += 0.5; }

  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double yv) {
    if (opt.log_y) yv = std::log10(yv);
    return mt + (1.0 - (yv - ymin) / (ymax - ymin)) * ph;
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << opt.width
      << "' height='" << opt.height << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << opt.width / 2 << "' y='22' text-anchor='middle' "
      << "font-family='sans-serif' font-size='15'>" << opt.title << "</text>\n";

  // axes and ticks
  out << "<line x1='" << ml << "' y1='" << mt + ph << "' x2='" << ml + pw
      << "' y2='" << mt + ph << "' stroke='black'/>\n"
      << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='"
      << mt + ph << "' stroke='black'/>\n";
  const int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double fx = xmin + (xmax - xmin) * i / ticks;
    out << "<line x1='" << px(fx) << "' y1='" << mt + ph << "' x2='" << px(fx)
        << "' y2='" << mt + ph + 5 << "' stroke='black'/>\n"
        << "<text x='" << px(fx) << "' y='" << mt + ph + 20
        << "' text-anchor='middle' font-family='sans-serif' font-size='11'>"
        << fmt(fx) << "</text>\n";
    const double fy = ymin + (ymax - ymin) * i / ticks;
    const double yy = mt + (1.0 - static_cast<double>(i) / ticks) * ph;
    out << "<line x1='" << ml - 5 << "' y1='" << yy << "' x2='" << ml << "' y2='"
        << yy << "' stroke='black'/>\n"
        << "<text x='" << ml - 8 << "' y='" << yy + 4
        << "' text-anchor='end' font-family='sans-serif' font-size='11'>"
        << (opt.log_y ? "1e" + fmt(fy) : fmt(fy)) << "</text>\n";
  }
  out << "<text x='" << ml + pw / 2 << "' y='" << opt.height - 10
      << "' text-anchor='middle' font-family='sans-serif' font-size='13'>"
      << opt.x_label << "</text>\n"
      << "<text x='18' y='" << mt + ph / 2
      << "' text-anchor='middle' font-family='sans-serif' font-size='13' "
      << "transform='rotate(-90 18 " << mt + ph / 2 << ")'>" << opt.y_label
      << "</text>\n";

  // series polylines and legend
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % (sizeof(kColors) / sizeof(kColors[0]))];
    out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < series[s].x.size(); ++i) {
      const double yv = series[s].y[i];
      if (opt.log_y && !(yv > 0.0)) continue;
      out << px(series[s].x[i]) << ',' << py(yv) << ' ';
    }
    out << "'/>\n";
    const double ly = mt + 16.0 * (s + 1);
    out << "<line x1='" << ml + pw - 130 << "' y1='" << ly << "' x2='"
        << ml + pw - 110 << "' y2='" << ly << "' stroke='" << color
        << "' stroke-width='2'/>\n"
        << "<text x='" << ml + pw - 105 << "' y='" << ly + 4
        << "' font-family='sans-serif' font-size='11'>" << series[s].label
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace ijt::svg
