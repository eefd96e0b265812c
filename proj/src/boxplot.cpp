/*
 * Copyright 2026 The hpek Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "hpek/error.hpp"
#include "hpek/report.hpp"

namespace hpek {
namespace {

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct BoxStats {
  QuartileSummary q;
  double whisker_lo;
  double whisker_hi;
  std::vector<double> outliers;
};

BoxStats box_stats(const std::vector<double>& values) {
  BoxStats s{quartile_summary(values), 0, 0, {}};
  const double iqr = s.q.q3 - s.q.q1;
  const double fence_lo = s.q.q1 - 1.5 * iqr;
  const double fence_hi = s.q.q3 + 1.5 * iqr;
  s.whisker_lo = s.q.q1;
  s.whisker_hi = s.q.q3;
  for (double v : values) {
    if (v >= fence_lo && v <= fence_hi) {
      s.whisker_lo = std::min(s.whisker_lo, v);
      s.whisker_hi = std::max(s.whisker_hi, v);
    } else {
      s.outliers.push_back(v);
    }
  }
  return s;
}

}  // namespace

std::string render_boxplot_svg(const std::vector<BoxSeries>& series, std::string_view title,
                               std::string_view y_label) {
  if (series.empty()) throw InvalidInput("emit_boxplot: no series");
  std::vector<BoxStats> boxes;
  for (const auto& s : series) {
    if (s.values.empty()) throw InvalidInput("emit_boxplot: series '" + s.label + "' is empty");
    boxes.push_back(box_stats(s.values));
  }

  double lo = boxes.front().whisker_lo;
  double hi = boxes.front().whisker_hi;
  for (const auto& b : boxes) {
    lo = std::min(lo, b.whisker_lo);
    hi = std::max(hi, b.whisker_hi);
    for (double v : b.outliers) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi == lo) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
    lo -= pad;
    hi += pad;
  }

  constexpr double left = 80, right = 20, top = 50, plot_h = 320, bottom = 110, slot = 70;
  const double width = left + right + slot * static_cast<double>(series.size());
  const double height = top + plot_h + bottom;
  auto y_of = [&](double v) { return top + plot_h * (hi - v) / (hi - lo); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width, 0) << "\" height=\""
      << fixed(height, 0) << "\" viewBox=\"0 0 " << fixed(width, 0) << ' ' << fixed(height, 0)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fixed(width, 0) << "\" height=\"" << fixed(height, 0)
      << "\" fill=\"white\"/>\n"
      << "<text x=\"" << fixed(width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << xml_escape(title) << "</text>\n";

  // y axis with five ticks
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << top + plot_h << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = lo + (hi - lo) * t / 4.0;
    const double y = y_of(v);
    svg << "<line x1=\"" << left - 5 << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(width - right)
        << "\" y2=\"" << fixed(y) << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << fixed(y + 4) << "\" text-anchor=\"end\">"
        << tick_label(v) << "</text>\n";
  }
  if (!y_label.empty()) {
    svg << "<text x=\"18\" y=\"" << fixed(top + plot_h / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << fixed(top + plot_h / 2) << ")\">"
        << xml_escape(y_label) << "</text>\n";
  }

  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& b = boxes[i];
    const double cx = left + slot * (static_cast<double>(i) + 0.5);
    const double half = slot * 0.3;
    svg << "<g class=\"box\">\n"
        << "<title>" << xml_escape(series[i].label) << ": q1=" << tick_label(b.q.q1)
        << " median=" << tick_label(b.q.median) << " q3=" << tick_label(b.q.q3)
        << " n=" << b.q.n << "</title>\n";
    svg << "<line x1=\"" << fixed(cx) << "\" y1=\"" << fixed(y_of(b.whisker_hi)) << "\" x2=\""
        << fixed(cx) << "\" y2=\"" << fixed(y_of(b.q.q3)) << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << fixed(cx) << "\" y1=\"" << fixed(y_of(b.q.q1)) << "\" x2=\"" << fixed(cx)
        << "\" y2=\"" << fixed(y_of(b.whisker_lo)) << "\" stroke=\"black\"/>\n";
    for (double w : {b.whisker_lo, b.whisker_hi}) {
      svg << "<line x1=\"" << fixed(cx - half / 2) << "\" y1=\"" << fixed(y_of(w)) << "\" x2=\""
          << fixed(cx + half / 2) << "\" y2=\"" << fixed(y_of(w)) << "\" stroke=\"black\"/>\n";
    }
    svg << "<rect x=\"" << fixed(cx - half) << "\" y=\"" << fixed(y_of(b.q.q3)) << "\" width=\""
        << fixed(2 * half) << "\" height=\"" << fixed(y_of(b.q.q1) - y_of(b.q.q3))
        << "\" fill=\"#9ecae1\" stroke=\"black\"/>\n"
        << "<line x1=\"" << fixed(cx - half) << "\" y1=\"" << fixed(y_of(b.q.median)) << "\" x2=\""
        << fixed(cx + half) << "\" y2=\"" << fixed(y_of(b.q.median))
        << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    // One marker per distinct pixel row keeps large samples readable.
    std::set<long> rows;
    for (double v : b.outliers) {
      const long row = std::lround(y_of(v) * 2);
      if (rows.insert(row).second) {
        svg << "<circle cx=\"" << fixed(cx) << "\" cy=\"" << fixed(row / 2.0)
            << "\" r=\"2\" fill=\"none\" stroke=\"#555555\"/>\n";
      }
    }
    const double ly = top + plot_h + 14;
    svg << "<text x=\"" << fixed(cx) << "\" y=\"" << fixed(ly) << "\" text-anchor=\"end\" transform=\"rotate(-40 "
        << fixed(cx) << ' ' << fixed(ly) << ")\">" << xml_escape(series[i].label) << "</text>\n"
        << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_boxplot(const std::vector<BoxSeries>& series, std::string_view title,
                  const std::filesystem::path& path, std::string_view y_label) {
  const std::string svg = render_boxplot_svg(series, title, y_label);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << svg;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace hpek
