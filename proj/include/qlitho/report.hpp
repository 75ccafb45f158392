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
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qlitho {

// Locale-independent, 17 significant digits.
std::string format_double(double v);

struct Column {
  std::string name;
  std::vector<double> values;
};

// Comma-separated, LF line endings, one header row. Throws IoError.
std::string render_csv(const std::vector<Column>& columns);
void write_text(const std::filesystem::path& path, std::string_view text);

// Rows of "phi,value" with that header. Throws IoError / DomainError.
std::vector<std::pair<double, double>> read_phi_value_csv(const std::filesystem::path& path);

struct Series {
  std::string label;
  std::vector<double> values;
  std::string color;
  std::string dash;  // SVG stroke-dasharray, empty for solid
};

// Static 800x500 line chart over a shared x axis.
std::string render_svg(std::string_view title, const std::vector<double>& xs,
                       const std::vector<Series>& series);

}  // namespace qlitho
