// Copyright 2026 The tpslab Authors
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

// Reproducible scenario runner. A scenario is described by a JSON config
// (see README.md for the schema), executed in memory into a Report, and
// written as summary.json + series.csv.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tpslab/errors.hpp"
#include "tpslab/linalg.hpp"

namespace tpslab {

/// Invalid configuration; `field()` names the offending key path.
class ConfigError : public InvalidInput {
 public:
  ConfigError(std::string field, const std::string& message)
      : InvalidInput(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class ScenarioKind { TeleportCheck, Lemma1Sweep, Lemma2Sweep, QcrDemo, DynamicsTrace };

const char* to_string(ScenarioKind kind);

struct GroupingSpec {
  std::vector<Index> s_indices;
};
struct UnitaryFileSpec {
  std::filesystem::path path;
};
/// A fresh Haar-random structure unitary per trial.
struct HaarStructureSpec {
  Index dS = 0;
};
using StructureConfig = std::variant<GroupingSpec, UnitaryFileSpec, HaarStructureSpec>;

struct ProjectionConfig {
  enum class Kind { TypeI, TypeII, TypeIII } kind = Kind::TypeI;
  // TypeI: "maximally_mixed", "environment" (tr_S of the state under study) or a file path.
  std::string rho_ref = "maximally_mixed";
  // TypeII: computational bins, or explicit (projector file, rho file) pairs.
  bool computational_bins = true;
  std::vector<std::pair<std::filesystem::path, std::filesystem::path>> bins;
  // TypeIII: "computational" or a file with a unitary whose columns span E.
  std::string basis = "computational";
};

struct StateConfig {
  enum class Kind { HaarPure, Ginibre, Alternating, Product, Teleport } kind = Kind::Alternating;
  Index rank = 2;
  ComplexVector u;  // teleport input qubit
};

struct HamiltonianConfig {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> file;
};

struct TimeGridConfig {
  double t0 = 0.0;
  double t1 = 5.0;
  Index steps = 50;
};

struct ScenarioConfig {
  int version = 1;
  ScenarioKind scenario = ScenarioKind::Lemma1Sweep;
  std::vector<Index> layout;
  StructureConfig structure_a;
  StructureConfig structure_b;
  ProjectionConfig projection_a;
  ProjectionConfig projection_b;
  StateConfig state;
  HamiltonianConfig hamiltonian;
  TimeGridConfig time_grid;
  Index trials = 1;
  std::uint64_t base_seed = 0;
  double threshold = 1e-6;
  std::filesystem::path output_dir = ".";
};

/// Parses and normalizes a config. Relative file paths are resolved against
/// `base_dir`. Unknown keys are errors. Throws ConfigError.
ScenarioConfig parse_config(std::string_view json_text,
                            const std::filesystem::path& base_dir = {});
/// Reads and parses; an unreadable file is a ConfigError on field "<file>".
ScenarioConfig load_config(const std::filesystem::path& path);

/// Semantic checks beyond parsing: referenced files exist and have the right
/// format and dimensions, projections fit their structures. Throws ConfigError.
void validate(const ScenarioConfig& cfg);

/// Canonical (sorted keys, defaults filled in) JSON form of a config.
std::string canonical_json(const ScenarioConfig& cfg);

struct Report {
  std::string summary_json;
  std::string series_csv;
};

/// Runs the scenario in memory. Throws ConfigError for invalid configs and
/// InvariantViolation when a guaranteed identity fails during the run.
/// `workers` = 0 picks the hardware concurrency; output never depends on it.
Report execute(const ScenarioConfig& cfg, unsigned workers = 0);

/// Writes summary.json and series.csv into `dir` (temp file + rename each).
void write_report(const Report& report, const std::filesystem::path& dir);

/// execute + write_report into cfg.output_dir.
Report run(const ScenarioConfig& cfg, unsigned workers = 0);

/// Decimal text with 17 significant digits ("nan" / "inf" / "-inf" for non-finite).
std::string format_double(double x);

}  // namespace tpslab
