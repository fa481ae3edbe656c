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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qwalk/experiment/config.hpp"
#include "qwalk/experiment/results.hpp"
#include "qwalk/experiment/runner.hpp"

using namespace qwalk;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qwalk-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const Table& table(const Results& r, const std::string& name) {
  for (const auto& t : r.tables) {
    if (t.name == name) return t;
  }
  FAIL("missing table " << name);
  throw;
}

std::size_t column(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

double real_cell(const Cell& c) { return std::get<double>(c); }

ExperimentConfig config(const std::string& experiment, json params) {
  return parse_config({{"experiment", experiment}, {"parameters", std::move(params)}});
}

std::vector<std::vector<double>> read_dat(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::vector<std::vector<double>> out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double x = 0, y = 0;
    ls >> x >> y;
    out.push_back({x, y});
  }
  return out;
}

int run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + "\"" QWALK_CLI_PATH "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write_config(const fs::path& dir, const json& doc) {
  const fs::path p = dir / "config.json";
  std::ofstream(p) << doc.dump(2);
  return p;
}

}  // namespace

TEST_SUITE("experiment") {
  TEST_CASE("config parsing") {
    const auto cfg = parse_config({{"experiment", "qrw"},
                                   {"parameters", {{"steps", 3}}},
                                   {"output", {{"path", "out"}, {"format", "json"}}},
                                   {"seed", 7}});
    CHECK(cfg.experiment == ExperimentKind::kQrw);
    CHECK(cfg.format == OutputFormat::kJson);
    CHECK(cfg.seed == 7);
    CHECK(cfg.out_path == fs::path("out"));
    CHECK(parse_config(to_json(cfg)).parameters == cfg.parameters);

    CHECK_THROWS_AS(parse_config({{"experiment", "nope"}}), ConfigError);
    CHECK_THROWS_AS(parse_config({{"experiment", "qrw"}, {"extra", 1}}), ConfigError);
    CHECK_THROWS_AS(parse_config({{"experiment", "qrw"}, {"output", {{"format", "xml"}}}}),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(json::array()), ConfigError);
    CHECK(all_experiments().size() == 7);
    for (auto k : all_experiments()) CHECK(experiment_from_string(to_string(k)) == k);
  }

  TEST_CASE("typed parameter reads") {
    Params p(json{{"x", 1.5}, {"n", 3}, {"s", "abc"}, {"v", {1, 2}}, {"unused", 0}});
    CHECK(p.real("x", 0.0) == 1.5);
    CHECK(p.integer("n", 0) == 3);
    CHECK(p.text("s", "") == "abc");
    CHECK(p.reals("v", {}) == std::vector<double>{1, 2});
    CHECK(p.real("missing", 2.5) == 2.5);
    CHECK(p.resolved()["missing"] == 2.5);
    CHECK_THROWS_AS(p.reject_unknown(), ConfigError);
    Params bad(json{{"n", 1.5}});
    CHECK_THROWS_AS(bad.integer("n", 0), ConfigError);
    try {
      bad.fail("n", "nope");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("parameters.n") != std::string::npos);
    }
  }

  TEST_CASE("module preconditions surface as config errors") {
    CHECK_THROWS_AS(run_experiment(config("qrw", {{"steps", 5}, {"size", 7}})), ConfigError);
    CHECK_THROWS_AS(run_experiment(config("classical", {{"walk", "gillis"}, {"eps", 1.0}})),
                    ConfigError);
    CHECK_THROWS_AS(run_experiment(config("classical", {{"stepz", 3}})), ConfigError);
    CHECK_THROWS_AS(run_experiment(config("zn-factor", {{"factors", {4, 6}}})), ConfigError);
    CHECK_THROWS_AS(run_experiment(config("master-eq", {{"dt", 0.5}})), ConfigError);
  }

  TEST_CASE("CSV and plot formatting") {
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
    Table t{"t", {"a", "b"}, {}};
    t.add_row({1.0, std::string("x,y")});
    CHECK(to_csv(t) == "a,b\n1,\"x,y\"\n");
    CHECK_THROWS(t.add_row({1.0}));
    const PlotSeries empty{"e", "step", "value", {}};
    CHECK(plot_text(empty) == "# step value label\n");
    const auto dir = scratch("empty-plot");
    Results r;
    r.plots.push_back(empty);
    emit_plot_data(r, dir);
    CHECK(slurp(dir / "e.dat") == "# step value label\n");
  }

  TEST_CASE("qrw run reports the sigma ratio table") {
    const auto out = run_experiment(config("qrw", {{"scheme", "qrw2"}, {"steps", 5}}));
    const auto& m = table(out.results, "moments");
    const auto& last = m.rows.back();
    CHECK(std::get<std::int64_t>(last[column(m, "step")]) == 5);
    CHECK(std::abs(real_cell(last[column(m, "sigma_ratio")]) - 2.0) < 1e-9);
    CHECK(out.resolved_parameters["coin"] == "symmetric-hadamard");
  }

  TEST_CASE("classical run with zero steps returns the input pd") {
    const std::vector<double> init{0.1, 0.2, 0.3, 0.4, 0.0};
    const auto out = run_experiment(
        config("classical", {{"walk", "polya"}, {"size", 5}, {"steps", 0}, {"initial_pd", init}}));
    const auto& pd = table(out.results, "pd");
    REQUIRE(pd.rows.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(real_cell(pd.rows[i][column(pd, "probability")]) == init[i]);
    }
  }

  TEST_CASE("zn-factor run on Z_60") {
    const auto out = run_experiment(config("zn-factor", {{"factors", {3, 4, 5}}, {"steps", 20}}));
    const auto& s = out.results.summary;
    CHECK(s["n"] == 60);
    CHECK(s["max_deviation"].get<double>() < 1e-11);
    CHECK(s["crt_roundtrip"] == true);
    for (const auto& row : table(out.results, "deviations").rows) {
      CHECK(real_cell(row[1]) < 1e-11);
    }
  }

  TEST_CASE("sigma series files") {
    const auto dir = scratch("sigma");
    auto cfg = config("qrw", {{"scheme", "all"}, {"steps", 40}, {"size", 163}});
    cfg.out_path = dir;
    run_and_write(cfg);
    const auto crw = read_dat(dir / "sigma_crw.dat");
    REQUIRE(crw.size() == 41);
    for (const auto& row : crw) CHECK(std::abs(row[1] - std::sqrt(row[0])) < 1e-10);
    const auto q1 = read_dat(dir / "sigma_qrw1.dat");
    const double rate = q1[40][1] / 40.0;
    const double target = std::sqrt((2.0 - std::sqrt(2.0)) / 2.0);
    CHECK(std::abs(rate - target) < 0.1 * target);
    CHECK(fs::exists(dir / "metadata.json"));
    const auto meta = json::parse(slurp(dir / "metadata.json"));
    CHECK(meta["version"] == std::string(kVersion));
  }

  TEST_CASE("identical config and seed give byte-identical CSV") {
    const json params{{"trials", 10}, {"arw_trials", 2}, {"arw_size", 9}, {"arw_steps", 5}};
    auto a = config("majorization-audit", params);
    auto b = a;
    a.seed = b.seed = 99;
    a.out_path = scratch("det-a");
    b.out_path = scratch("det-b");
    run_and_write(a);
    run_and_write(b);
    for (const char* f : {"pairs.csv", "arw.csv"}) {
      CHECK(slurp(a.out_path / f) == slurp(b.out_path / f));
      CHECK_FALSE(slurp(a.out_path / f).empty());
    }
    auto c = a;
    c.seed = 100;
    c.out_path = scratch("det-c");
    run_and_write(c);
    CHECK(slurp(a.out_path / "pairs.csv") != slurp(c.out_path / "pairs.csv"));
  }

  TEST_CASE("JSON output round-trips the pd vectors") {
    auto cfg = config("classical", {{"walk", "ls"}, {"size", 11}, {"steps", 4}});
    cfg.format = OutputFormat::kJson;
    cfg.out_path = scratch("json");
    const auto out = run_and_write(cfg);
    const auto doc = json::parse(slurp(cfg.out_path / "results.json"));
    const auto& pd = table(out.results, "pd");
    const auto& rows = doc["tables"]["pd"]["rows"];
    REQUIRE(rows.size() == pd.rows.size());
    const std::size_t col = column(pd, "probability");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i][col].get<double>() == real_cell(pd.rows[i][col]));
    }
  }

  TEST_CASE("dimension cap from the environment") {
    ::unsetenv("QWALK_DIM_CAP");
    CHECK(dimension_cap_from_env() == 2048);
    ::setenv("QWALK_DIM_CAP", "64", 1);
    CHECK(dimension_cap_from_env() == 64);
    ::unsetenv("QWALK_DIM_CAP");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("list and version") {
    CHECK(run_cli("list-experiments") == 0);
    CHECK(run_cli("--version") == 0);
    CHECK(run_cli("") == 1);
    CHECK(run_cli("run") == 1);
  }

  TEST_CASE("exit statuses") {
    const auto dir = scratch("cli");
    const auto ok = write_config(dir, {{"experiment", "qrw"}, {"parameters", {{"steps", 3}}}});
    CHECK(run_cli("run --config " + ok.string() + " --out " + (dir / "ok").string()) == 0);
    CHECK(fs::exists(dir / "ok" / "moments.csv"));
    CHECK(run_cli("run --config " + ok.string() + " --format json --out " +
                  (dir / "js").string()) == 0);
    CHECK(fs::exists(dir / "js" / "results.json"));
    CHECK(run_cli("run --config " + ok.string() + " --format xml") == 1);
    CHECK(run_cli("run --config " + (dir / "missing.json").string()) == 1);

    const auto bad = write_config(dir, {{"experiment", "qrw"}, {"parameters", {{"stepz", 3}}}});
    CHECK(run_cli("run --config " + bad.string() + " --out " + (dir / "bad").string()) == 1);

    const auto guard = write_config(
        dir, {{"experiment", "cs-qrw"},
              {"parameters", {{"m", 16}, {"beta_re", 1.5}, {"steps", 20}}}});
    CHECK(run_cli("run --config " + guard.string() + " --out " + (dir / "guard").string()) == 2);
  }

  TEST_CASE("QWALK_DIM_CAP reaches the unitarization") {
    const auto dir = scratch("cli-cap");
    const auto cfg = write_config(
        dir, {{"experiment", "qrw"},
              {"parameters", {{"steps", 2}, {"k_coins", 3}, {"k_size", 7}}}});
    const std::string args = "run --config " + cfg.string() + " --out " + (dir / "o").string();
    CHECK(run_cli(args) == 0);
    CHECK(run_cli(args, "QWALK_DIM_CAP=16") == 2);
  }
}
