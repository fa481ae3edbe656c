// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qwalk/experiment/config.hpp"

namespace qwalk {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// One plottable series: x, y and an optional label per point.
struct PlotSeries {
  std::string name;
  std::string x_label;
  std::string y_label;
  struct Point {
    double x;
    double y;
    std::string label;
  };
  std::vector<Point> points;
};

struct Results {
  std::vector<Table> tables;
  std::vector<PlotSeries> plots;
  nlohmann::json summary = nlohmann::json::object();
};

/// Shortest round-trip text for a double (17 significant digits).
std::string format_real(double x);

/// CSV text: header row, then one line per row.
std::string to_csv(const Table& t);

/// {"summary": ..., "tables": {name: {"columns": [...], "rows": [[...]]}}}
nlohmann::json to_json(const Results& r);

/// Writes <table>.csv per table, or results.json, into dir.
void write_results(const Results& r, const std::filesystem::path& dir,
                   OutputFormat format);

/// Writes <series>.dat per series: a "# x y label" header line, then
/// whitespace-separated points.
void emit_plot_data(const Results& r, const std::filesystem::path& dir);

std::string plot_text(const PlotSeries& s);

}  // namespace qwalk
