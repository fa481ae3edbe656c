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

#include "qwalk/experiment/results.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qwalk {
namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

nlohmann::json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, c);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw Error("table " + name + ": row has " + std::to_string(row.size()) +
                " cells, expected " + std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << cell_text(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const Results& r) {
  nlohmann::json tables = nlohmann::json::object();
  for (const auto& t : r.tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& c : row) jr.push_back(cell_json(c));
      rows.push_back(std::move(jr));
    }
    tables[t.name] = {{"columns", t.columns}, {"rows", std::move(rows)}};
  }
  return {{"summary", r.summary}, {"tables", std::move(tables)}};
}

void write_results(const Results& r, const std::filesystem::path& dir,
                   OutputFormat format) {
  std::filesystem::create_directories(dir);
  if (format == OutputFormat::kJson) {
    write_file(dir / "results.json", to_json(r).dump(2) + "\n");
    return;
  }
  for (const auto& t : r.tables) write_file(dir / (t.name + ".csv"), to_csv(t));
  write_file(dir / "summary.json", r.summary.dump(2) + "\n");
}

std::string plot_text(const PlotSeries& s) {
  std::ostringstream out;
  out << "# " << s.x_label << ' ' << s.y_label << " label\n";
  for (const auto& p : s.points) {
    out << format_real(p.x) << ' ' << format_real(p.y);
    if (!p.label.empty()) out << ' ' << p.label;
    out << '\n';
  }
  return out.str();
}

void emit_plot_data(const Results& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& s : r.plots) write_file(dir / (s.name + ".dat"), plot_text(s));
}

}  // namespace qwalk
