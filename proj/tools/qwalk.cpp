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

// qwalk run --config cfg.json [--seed N] [--out dir] [--format csv|json]
//           [--experiment name]
// qwalk list-experiments
//
// Exit status: 0 success, 1 invalid input, 2 numerical guard tripped.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qwalk/error.hpp"
#include "qwalk/experiment/config.hpp"
#include "qwalk/experiment/runner.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitNumerical = 2;

int run_command(const std::string& config_path,
                const std::optional<std::uint64_t>& seed,
                const std::optional<std::string>& out,
                const std::optional<std::string>& format,
                const std::optional<std::string>& experiment) {
  qwalk::ExperimentConfig cfg = qwalk::load_config(config_path);
  if (experiment) {
    const auto kind = qwalk::experiment_from_string(*experiment);
    if (!kind) throw qwalk::ConfigError("--experiment: unknown '" + *experiment + "'");
    cfg.experiment = *kind;
  }
  if (seed) cfg.seed = *seed;
  if (out) cfg.out_path = *out;
  if (format) {
    cfg.format = *format == "json" ? qwalk::OutputFormat::kJson
                                   : qwalk::OutputFormat::kCsv;
  }
  const auto outcome = qwalk::run_and_write(cfg);
  std::cout << "wrote " << cfg.out_path.string() << " ("
            << qwalk::to_string(cfg.experiment) << ", "
            << outcome.wall_seconds << " s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qwalk: classical and quantum random walk experiments"};
  app.set_version_flag("--version", std::string(qwalk::kVersion));
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run the experiment described by a config file");
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> experiment;
  run->add_option("--config", config_path, "JSON config file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--seed", seed, "override the config seed");
  run->add_option("--out", out, "output directory");
  run->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--experiment", experiment, "override the experiment");

  auto* list = app.add_subcommand("list-experiments", "print the experiment names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (list->parsed()) {
    for (auto kind : qwalk::all_experiments()) {
      std::cout << qwalk::to_string(kind) << "\t" << qwalk::describe(kind) << "\n";
    }
    return 0;
  }

  try {
    return run_command(config_path, seed, out, format, experiment);
  } catch (const qwalk::NumericalGuard& e) {
    std::cerr << "qwalk: numerical guard: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << "\n";
    return kExitInvalid;
  }
}
