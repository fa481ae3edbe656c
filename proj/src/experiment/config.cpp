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

#include "qwalk/experiment/config.hpp"

#include <cmath>
#include <fstream>

namespace qwalk {
namespace {

struct Entry {
  ExperimentKind kind;
  std::string_view name;
  std::string_view description;
};

constexpr Entry kEntries[] = {
    {ExperimentKind::kClassical, "classical",
     "classical walk pd evolution with entropy and majorization per step"},
    {ExperimentKind::kZnFactor, "zn-factor",
     "CRT factorization of a Z_N walk into coprime factor walks"},
    {ExperimentKind::kQrw, "qrw",
     "coined quantum walk under the CRW, QRW1 and QRW2 tracing schemes"},
    {ExperimentKind::kCsQrw, "cs-qrw",
     "displacement-channel walk on a truncated Fock space"},
    {ExperimentKind::kMasterEq, "master-eq",
     "fixed-step integration of the Fock-space master equation"},
    {ExperimentKind::kDiffusionLimit, "diffusion-limit",
     "n-step displacement walk against the master equation as n grows"},
    {ExperimentKind::kMajorizationAudit, "majorization-audit",
     "random majorizing pairs and their T-transform constructions"},
};

}  // namespace

std::string_view to_string(ExperimentKind k) {
  for (const auto& e : kEntries) {
    if (e.kind == k) return e.name;
  }
  return "classical";
}

std::string_view describe(ExperimentKind k) {
  for (const auto& e : kEntries) {
    if (e.kind == k) return e.description;
  }
  return "";
}

std::optional<ExperimentKind> experiment_from_string(std::string_view s) {
  for (const auto& e : kEntries) {
    if (e.name == s) return e.kind;
  }
  return std::nullopt;
}

const std::vector<ExperimentKind>& all_experiments() {
  static const std::vector<ExperimentKind> kinds = [] {
    std::vector<ExperimentKind> v;
    for (const auto& e : kEntries) v.push_back(e.kind);
    return v;
  }();
  return kinds;
}

std::string_view to_string(OutputFormat f) {
  return f == OutputFormat::kCsv ? "csv" : "json";
}

ExperimentConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "experiment" && key != "parameters" && key != "output" &&
        key != "seed") {
      throw ConfigError("config: unknown field '" + key + "'");
    }
  }
  ExperimentConfig cfg;
  if (!doc.contains("experiment") || !doc["experiment"].is_string()) {
    throw ConfigError("experiment: required string");
  }
  const auto name = doc["experiment"].get<std::string>();
  const auto kind = experiment_from_string(name);
  if (!kind) throw ConfigError("experiment: unknown experiment '" + name + "'");
  cfg.experiment = *kind;

  if (doc.contains("parameters")) {
    if (!doc["parameters"].is_object()) {
      throw ConfigError("parameters: must be an object");
    }
    cfg.parameters = doc["parameters"];
  }
  if (doc.contains("output")) {
    const auto& out = doc["output"];
    if (!out.is_object()) throw ConfigError("output: must be an object");
    for (const auto& [key, _] : out.items()) {
      if (key != "path" && key != "format") {
        throw ConfigError("output: unknown field '" + key + "'");
      }
    }
    if (out.contains("path")) {
      if (!out["path"].is_string()) throw ConfigError("output.path: must be a string");
      cfg.out_path = out["path"].get<std::string>();
    }
    if (out.contains("format")) {
      const auto& f = out["format"];
      if (f == "csv") {
        cfg.format = OutputFormat::kCsv;
      } else if (f == "json") {
        cfg.format = OutputFormat::kJson;
      } else {
        throw ConfigError("output.format: expected \"csv\" or \"json\"");
      }
    }
  }
  if (doc.contains("seed")) {
    const auto& s = doc["seed"];
    if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<long long>() < 0)) {
      throw ConfigError("seed: must be a non-negative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config: " + path.string() + ": " + e.what());
  }
  return parse_config(doc);
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  return {{"experiment", std::string(to_string(cfg.experiment))},
          {"parameters", cfg.parameters},
          {"output",
           {{"path", cfg.out_path.string()},
            {"format", std::string(to_string(cfg.format))}}},
          {"seed", cfg.seed}};
}

// ------------------------------------------------------------------ Params

Params::Params(const nlohmann::json& raw) : raw_(raw) {
  if (!raw_.is_object()) throw ConfigError("parameters: must be an object");
}

const nlohmann::json* Params::find(const std::string& key) const {
  auto it = raw_.find(key);
  return it == raw_.end() ? nullptr : &*it;
}

bool Params::has(const std::string& key) const { return find(key) != nullptr; }

void Params::fail(const std::string& key, const std::string& what) const {
  throw ConfigError("parameters." + key + ": " + what);
}

double Params::real(const std::string& key, double fallback) {
  double v = fallback;
  if (const auto* j = find(key)) {
    if (!j->is_number()) fail(key, "must be a number");
    v = j->get<double>();
    if (!std::isfinite(v)) fail(key, "must be finite");
  }
  resolved_[key] = v;
  return v;
}

long Params::integer(const std::string& key, long fallback) {
  long v = fallback;
  if (const auto* j = find(key)) {
    if (!j->is_number_integer()) fail(key, "must be an integer");
    v = j->get<long>();
  }
  resolved_[key] = v;
  return v;
}

std::string Params::text(const std::string& key, const std::string& fallback) {
  std::string v = fallback;
  if (const auto* j = find(key)) {
    if (!j->is_string()) fail(key, "must be a string");
    v = j->get<std::string>();
  }
  resolved_[key] = v;
  return v;
}

bool Params::flag(const std::string& key, bool fallback) {
  bool v = fallback;
  if (const auto* j = find(key)) {
    if (!j->is_boolean()) fail(key, "must be true or false");
    v = j->get<bool>();
  }
  resolved_[key] = v;
  return v;
}

std::vector<double> Params::reals(const std::string& key,
                                  const std::vector<double>& fallback) {
  std::vector<double> v = fallback;
  if (const auto* j = find(key)) {
    if (!j->is_array()) fail(key, "must be an array of numbers");
    v.clear();
    for (const auto& x : *j) {
      if (!x.is_number()) fail(key, "must be an array of numbers");
      v.push_back(x.get<double>());
    }
  }
  resolved_[key] = v;
  return v;
}

std::vector<long> Params::integers(const std::string& key,
                                   const std::vector<long>& fallback) {
  std::vector<long> v = fallback;
  if (const auto* j = find(key)) {
    if (!j->is_array()) fail(key, "must be an array of integers");
    v.clear();
    for (const auto& x : *j) {
      if (!x.is_number_integer()) fail(key, "must be an array of integers");
      v.push_back(x.get<long>());
    }
  }
  resolved_[key] = v;
  return v;
}

void Params::reject_unknown() const {
  for (const auto& [key, _] : raw_.items()) {
    if (!resolved_.contains(key)) {
      throw ConfigError("parameters." + key + ": not used by this experiment");
    }
  }
}

}  // namespace qwalk
