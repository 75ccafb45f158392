// Copyright 2026 The qlitho Authors
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
#include "qlitho/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qlitho/error.hpp"

namespace qlitho {

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw DomainError("cannot format number");
  return {buf, end};
}

std::string render_csv(const std::vector<Column>& columns) {
  std::string out;
  if (columns.empty()) return out;
  const std::size_t rows = columns.front().values.size();
  for (const auto& c : columns) {
    if (c.values.size() != rows) throw ShapeError("CSV columns differ in length");
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (j) out += ',';
    out += columns[j].name;
  }
  out += '\n';
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (j) out += ',';
      out += format_double(columns[j].values[i]);
    }
    out += '\n';
  }
  return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw IoError("failed writing " + path.string());
}

std::vector<std::pair<double, double>> read_phi_value_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(f, line)) throw DomainError(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "phi,value") throw DomainError(path.string() + ": expected header 'phi,value'");
  std::vector<std::pair<double, double>> rows;
  int lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    double phi = 0, value = 0;
    const char* b = line.data();
    const char* e = b + line.size();
    if (comma == std::string::npos ||
        std::from_chars(b, b + comma, phi).ec != std::errc{} ||
        std::from_chars(b + comma + 1, e, value).ec != std::errc{}) {
      throw DomainError(path.string() + ":" + std::to_string(lineno) + ": malformed row");
    }
    rows.emplace_back(phi, value);
  }
  return rows;
}

std::string render_svg(std::string_view title, const std::vector<double>& xs,
                       const std::vector<Series>& series) {
  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;

  double x_min = xs.empty() ? 0.0 : xs.front(), x_max = xs.empty() ? 1.0 : xs.back();
  double y_min = 0.0, y_max = 0.0;
  for (const auto& s : series) {
    for (double v : s.values) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (y_max <= y_min) y_max = y_min + 1.0;
  y_max *= 1.05;

  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h; };
  auto num = [](double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, r.ptr);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  svg << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
  svg << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w)
      << "\" height=\"" << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double yv = y_min + (y_max - y_min) * t / 4.0;
    svg << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(yv) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(yv) << "</text>\n";
    const double xv = x_min + (x_max - x_min) * t / 4.0;
    svg << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kTop + plot_h + 16)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << num(xv) << "</text>\n";
  }
  svg << "<text x=\"400\" y=\"490\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">phi (rad)</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (!s.dash.empty()) svg << " stroke-dasharray=\"" << s.dash << "\"";
    svg << " points=\"";
    const std::size_t n = std::min(xs.size(), s.values.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (i) svg << ' ';
      svg << num(px(xs[i])) << ',' << num(py(s.values[i]));
    }
    svg << "\"/>\n";
    const double ly = kTop + 14 + 16.0 * static_cast<double>(k);
    svg << "<line x1=\"" << num(kWidth - kRight - 170) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(kWidth - kRight - 140) << "\" y2=\"" << num(ly) << "\" stroke=\"" << s.color << "\"";
    if (!s.dash.empty()) svg << " stroke-dasharray=\"" << s.dash << "\"";
    svg << "/>\n";
    svg << "<text x=\"" << num(kWidth - kRight - 134) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qlitho
