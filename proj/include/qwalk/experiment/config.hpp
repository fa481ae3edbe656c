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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

/// Invalid configuration; the message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class ExperimentKind {
  kClassical,
  kZnFactor,
  kQrw,
  kCsQrw,
  kMasterEq,
  kDiffusionLimit,
  kMajorizationAudit,
};

std::string_view to_string(ExperimentKind k);
std::optional<ExperimentKind> experiment_from_string(std::string_view s);
const std::vector<ExperimentKind>& all_experiments();
/// One-line description for `list-experiments`.
std::string_view describe(ExperimentKind k);

enum class OutputFormat { kCsv, kJson };

std::string_view to_string(OutputFormat f);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::kClassical;
  nlohmann::json parameters = nlohmann::json::object();
  std::filesystem::path out_path = "qwalk-out";
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t seed = 0;
};

/// Document layout:
///   {"experiment": "...", "parameters": {...},
///    "output": {"path": "...", "format": "csv" | "json"}, "seed": N}
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const ExperimentConfig& cfg);

/// Typed reads from the parameters object. Each read records the value it
/// resolved to (default or given), so the full effective configuration can
/// be written out after the run.
class Params {
 public:
  explicit Params(const nlohmann::json& raw);

  double real(const std::string& key, double fallback);
  long integer(const std::string& key, long fallback);
  std::string text(const std::string& key, const std::string& fallback);
  bool flag(const std::string& key, bool fallback);
  std::vector<double> reals(const std::string& key,
                            const std::vector<double>& fallback);
  std::vector<long> integers(const std::string& key,
                             const std::vector<long>& fallback);
  bool has(const std::string& key) const;

  /// Throws ConfigError("parameters.<key>: <what>").
  [[noreturn]] void fail(const std::string& key, const std::string& what) const;
  /// Rejects keys that were never read.
  void reject_unknown() const;

  const nlohmann::json& resolved() const { return resolved_; }

 private:
  const nlohmann::json* find(const std::string& key) const;

  nlohmann::json raw_;
  nlohmann::json resolved_ = nlohmann::json::object();
};

}  // namespace qwalk
