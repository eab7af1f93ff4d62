// Copyright 2026 The ZZZY Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zzzy/plot.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace zzzy {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

struct Point {
  double x;
  double y;
  double lo;
  double hi;
};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

class LogAxis {
 public:
  LogAxis(double lo, double hi, double pixel_lo, double pixel_hi)
      : lo_(std::floor(std::log10(lo))),
        hi_(std::max(std::ceil(std::log10(hi)), std::floor(std::log10(lo)) + 1)),
        pixel_lo_(pixel_lo),
        pixel_hi_(pixel_hi) {}

  double operator()(double v) const {
    return pixel_lo_ + (std::log10(v) - lo_) / (hi_ - lo_) * (pixel_hi_ - pixel_lo_);
  }
  int first_decade() const { return static_cast<int>(lo_); }
  int last_decade() const { return static_cast<int>(hi_); }

 private:
  double lo_;
  double hi_;
  double pixel_lo_;
  double pixel_hi_;
};

}  // namespace

void write_svg(std::ostream& out, const std::vector<CsvRow>& rows, const PlotOptions& options) {
  std::string axis = options.x_axis;
  if (axis == "auto") {
    std::set<double> asymmetries;
    for (const auto& r : rows) {
      asymmetries.insert(r.asymmetry);
    }
    axis = asymmetries.size() > 1 ? "A" : "p";
  }
  if (axis != "A" && axis != "p") {
    throw std::invalid_argument("x axis must be A, p or auto");
  }

  std::map<std::string, std::vector<Point>> series;
  for (const auto& r : rows) {
    const double x = axis == "A" ? r.asymmetry : r.p;
    if (!(r.pl > 0.0) || !std::isfinite(x) || !(x > 0.0)) {
      continue;
    }
    series[r.family + " d=" + std::to_string(r.distance)].push_back(
        {x, r.pl, std::max(r.ci_lo, r.pl * 1e-3), r.ci_hi});
  }
  if (series.empty()) {
    throw std::invalid_argument("no plottable rows (need p_L > 0 and a finite positive abscissa)");
  }

  double x_min = INFINITY, x_max = 0.0, y_min = INFINITY, y_max = 0.0;
  for (auto& [name, pts] : series) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    for (const auto& p : pts) {
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
      y_min = std::min(y_min, p.lo);
      y_max = std::max(y_max, p.hi);
    }
  }

  const double left = 80, right = options.width - 170.0, top = 40, bottom = options.height - 60.0;
  const LogAxis xs(x_min, x_max, left, right);
  const LogAxis ys(y_min, y_max, bottom, top);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    out << "<text x=\"" << (left + right) / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << escape(options.title) << "</text>\n";
  }
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left << "\" height=\""
      << bottom - top << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = xs.first_decade(); k <= xs.last_decade(); ++k) {
    const double px = xs(std::pow(10.0, k));
    out << "<line x1=\"" << px << "\" y1=\"" << top << "\" x2=\"" << px << "\" y2=\"" << bottom
        << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << px << "\" y=\"" << bottom + 18 << "\" text-anchor=\"middle\">1e" << k
        << "</text>\n";
  }
  for (int k = ys.first_decade(); k <= ys.last_decade(); ++k) {
    const double py = ys(std::pow(10.0, k));
    out << "<line x1=\"" << left << "\" y1=\"" << py << "\" x2=\"" << right << "\" y2=\"" << py
        << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">1e" << k
        << "</text>\n";
  }
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << options.height - 20
      << "\" text-anchor=\"middle\">" << (axis == "A" ? "asymmetry A" : "physical error rate p")
      << "</text>\n";
  out << "<text x=\"20\" y=\"" << (top + bottom) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << (top + bottom) / 2 << ")\">logical error rate</text>\n";

  std::size_t index = 0;
  for (const auto& [name, pts] : series) {
    const char* color = kPalette[index % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& p : pts) {
      out << xs(p.x) << ',' << ys(p.y) << ' ';
    }
    out << "\"/>\n";
    for (const auto& p : pts) {
      out << "<line x1=\"" << xs(p.x) << "\" y1=\"" << ys(p.lo) << "\" x2=\"" << xs(p.x)
          << "\" y2=\"" << ys(p.hi) << "\" stroke=\"" << color << "\"/>\n";
      out << "<circle cx=\"" << xs(p.x) << "\" cy=\"" << ys(p.y) << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
    }
    const double ly = top + 16 + 18.0 * static_cast<double>(index);
    out << "<line x1=\"" << right + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << right + 36
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << right + 42 << "\" y=\"" << ly << "\">" << escape(name) << "</text>\n";
    ++index;
  }
  out << "</svg>\n";
}

}  // namespace zzzy
