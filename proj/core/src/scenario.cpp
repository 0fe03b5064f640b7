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

#include "tpslab/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tpslab/dynamics.hpp"
#include "tpslab/matrix_io.hpp"
#include "tpslab/projections.hpp"
#include "tpslab/random.hpp"
#include "tpslab/relativity.hpp"
#include "tpslab/structures.hpp"

namespace tpslab {

using json = nlohmann::json;

const char* to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::TeleportCheck:
      return "teleport-check";
    case ScenarioKind::Lemma1Sweep:
      return "lemma1-sweep";
    case ScenarioKind::Lemma2Sweep:
      return "lemma2-sweep";
    case ScenarioKind::QcrDemo:
      return "qcr-demo";
    case ScenarioKind::DynamicsTrace:
      return "dynamics-trace";
  }
  return "unknown";
}

std::string format_double(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

// ---------------------------------------------------------------------------
// Parsing helpers

const char* state_kind_name(StateConfig::Kind k) {
  switch (k) {
    case StateConfig::Kind::HaarPure:
      return "haar_pure";
    case StateConfig::Kind::Ginibre:
      return "ginibre";
    case StateConfig::Kind::Alternating:
      return "alternating";
    case StateConfig::Kind::Product:
      return "product";
    case StateConfig::Kind::Teleport:
      return "teleport";
  }
  return "unknown";
}

const char* projection_kind_name(ProjectionConfig::Kind k) {
  switch (k) {
    case ProjectionConfig::Kind::TypeI:
      return "type_i";
    case ProjectionConfig::Kind::TypeII:
      return "type_ii";
    case ProjectionConfig::Kind::TypeIII:
      return "type_iii";
  }
  return "unknown";
}

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void check_keys(const json& obj, const std::string& prefix, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError(join(prefix, key), "unknown key");
    }
  }
}

const json& require_object(const json& j, const std::string& field) {
  if (!j.is_object()) {
    throw ConfigError(field, "must be a JSON object");
  }
  return j;
}

std::int64_t get_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) {
    throw ConfigError(field, "must be an integer");
  }
  return j.get<std::int64_t>();
}

std::uint64_t get_u64(const json& j, const std::string& field) {
  if (j.is_number_unsigned()) {
    return j.get<std::uint64_t>();
  }
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  throw ConfigError(field, "must be a non-negative integer");
}

double get_double(const json& j, const std::string& field) {
  if (!j.is_number()) {
    throw ConfigError(field, "must be a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ConfigError(field, "must be finite");
  }
  return v;
}

std::string get_string(const json& j, const std::string& field) {
  if (!j.is_string()) {
    throw ConfigError(field, "must be a string");
  }
  return j.get<std::string>();
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base.empty()) {
    return base / path;
  }
  return path;
}

std::vector<Index> parse_index_list(const json& j, const std::string& field, Index min_value) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError(field, "must be a non-empty array of integers");
  }
  std::vector<Index> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto v = get_int(j[k], field + "[" + std::to_string(k) + "]");
    if (v < min_value) {
      throw ConfigError(field + "[" + std::to_string(k) + "]",
                        "must be >= " + std::to_string(min_value));
    }
    out.push_back(static_cast<Index>(v));
  }
  return out;
}

StructureConfig parse_structure(const json& j, const std::string& field,
                                const std::filesystem::path& base) {
  require_object(j, field);
  check_keys(j, field, {"grouping", "unitary_file", "haar"});
  if (j.size() != 1) {
    throw ConfigError(field, "exactly one of \"grouping\", \"unitary_file\", \"haar\" required");
  }
  if (j.contains("grouping")) {
    return GroupingSpec{parse_index_list(j["grouping"], field + ".grouping", 0)};
  }
  if (j.contains("unitary_file")) {
    return UnitaryFileSpec{resolve(base, get_string(j["unitary_file"], field + ".unitary_file"))};
  }
  const json& h = require_object(j["haar"], field + ".haar");
  check_keys(h, field + ".haar", {"dS"});
  if (!h.contains("dS")) {
    throw ConfigError(field + ".haar.dS", "required");
  }
  const auto dS = get_int(h["dS"], field + ".haar.dS");
  if (dS < 1) {
    throw ConfigError(field + ".haar.dS", "must be >= 1");
  }
  return HaarStructureSpec{static_cast<Index>(dS)};
}

ProjectionConfig parse_projection(const json& j, const std::string& field,
                                  const std::filesystem::path& base) {
  require_object(j, field);
  if (!j.contains("kind")) {
    throw ConfigError(field + ".kind", "required");
  }
  const std::string kind = get_string(j["kind"], field + ".kind");
  ProjectionConfig out;
  if (kind == "type_i") {
    out.kind = ProjectionConfig::Kind::TypeI;
    check_keys(j, field, {"kind", "rho_ref"});
    if (j.contains("rho_ref")) {
      const std::string r = get_string(j["rho_ref"], field + ".rho_ref");
      out.rho_ref = (r == "maximally_mixed" || r == "environment") ? r : resolve(base, r).string();
    }
  } else if (kind == "type_ii") {
    out.kind = ProjectionConfig::Kind::TypeII;
    check_keys(j, field, {"kind", "bins"});
    if (j.contains("bins")) {
      const json& b = j["bins"];
      if (b.is_string()) {
        if (b.get<std::string>() != "computational") {
          throw ConfigError(field + ".bins", "must be \"computational\" or an array of bins");
        }
      } else if (b.is_array() && !b.empty()) {
        out.computational_bins = false;
        for (std::size_t k = 0; k < b.size(); ++k) {
          const std::string bf = field + ".bins[" + std::to_string(k) + "]";
          require_object(b[k], bf);
          check_keys(b[k], bf, {"projector", "rho"});
          if (!b[k].contains("projector") || !b[k].contains("rho")) {
            throw ConfigError(bf, "both \"projector\" and \"rho\" files required");
          }
          out.bins.emplace_back(resolve(base, get_string(b[k]["projector"], bf + ".projector")),
                                resolve(base, get_string(b[k]["rho"], bf + ".rho")));
        }
      } else {
        throw ConfigError(field + ".bins", "must be \"computational\" or a non-empty array");
      }
    }
  } else if (kind == "type_iii") {
    out.kind = ProjectionConfig::Kind::TypeIII;
    check_keys(j, field, {"kind", "basis"});
    if (j.contains("basis")) {
      const std::string b = get_string(j["basis"], field + ".basis");
      out.basis = b == "computational" ? b : resolve(base, b).string();
    }
  } else {
    throw ConfigError(field + ".kind", "must be one of type_i, type_ii, type_iii");
  }
  return out;
}

ComplexVector parse_qubit(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError(field, "must be an array of two amplitudes");
  }
  ComplexVector u(2);
  for (std::size_t k = 0; k < 2; ++k) {
    const std::string f = field + "[" + std::to_string(k) + "]";
    if (j[k].is_number()) {
      u(static_cast<Index>(k)) = get_double(j[k], f);
    } else if (j[k].is_array() && j[k].size() == 2) {
      u(static_cast<Index>(k)) = Complex(get_double(j[k][0], f + "[0]"),
                                         get_double(j[k][1], f + "[1]"));
    } else {
      throw ConfigError(f, "amplitude must be a number or [re, im]");
    }
  }
  if (std::abs(u.squaredNorm() - 1.0) > tol::kNorm) {
    throw ConfigError(field, "qubit state must be normalized");
  }
  return u;
}

StateConfig parse_state(const json& j, const std::string& field) {
  require_object(j, field);
  check_keys(j, field, {"kind", "rank", "u"});
  if (!j.contains("kind")) {
    throw ConfigError(field + ".kind", "required");
  }
  const std::string kind = get_string(j["kind"], field + ".kind");
  StateConfig out;
  if (kind == "haar_pure") {
    out.kind = StateConfig::Kind::HaarPure;
  } else if (kind == "ginibre") {
    out.kind = StateConfig::Kind::Ginibre;
  } else if (kind == "alternating") {
    out.kind = StateConfig::Kind::Alternating;
  } else if (kind == "product") {
    out.kind = StateConfig::Kind::Product;
  } else if (kind == "teleport") {
    out.kind = StateConfig::Kind::Teleport;
  } else {
    throw ConfigError(field + ".kind",
                      "must be one of haar_pure, ginibre, alternating, product, teleport");
  }
  const bool uses_rank =
      out.kind == StateConfig::Kind::Ginibre || out.kind == StateConfig::Kind::Alternating;
  if (j.contains("rank")) {
    if (!uses_rank) {
      throw ConfigError(field + ".rank", std::string("not used by state kind ") + kind);
    }
    const auto r = get_int(j["rank"], field + ".rank");
    if (r < 1) {
      throw ConfigError(field + ".rank", "must be >= 1");
    }
    out.rank = static_cast<Index>(r);
  }
  if (j.contains("u")) {
    if (out.kind != StateConfig::Kind::Teleport) {
      throw ConfigError(field + ".u", "only used by state kind teleport");
    }
    out.u = parse_qubit(j["u"], field + ".u");
  }
  if (out.kind == StateConfig::Kind::Teleport && out.u.size() == 0) {
    out.u = PureState::basis(2, 0).vec();
  }
  return out;
}

StateConfig default_state(ScenarioKind kind) {
  StateConfig s;
  switch (kind) {
    case ScenarioKind::QcrDemo:
      s.kind = StateConfig::Kind::Product;
      break;
    case ScenarioKind::TeleportCheck:
    case ScenarioKind::DynamicsTrace:
      s.kind = StateConfig::Kind::Teleport;
      s.u = PureState::basis(2, 0).vec();
      break;
    default:
      s.kind = StateConfig::Kind::Alternating;
      s.rank = 2;
      break;
  }
  return s;
}

Index structure_dS(const StructureConfig& sc, const std::vector<Index>& layout,
                   const std::string& field) {
  if (const auto* g = std::get_if<GroupingSpec>(&sc)) {
    Index d = 1;
    for (Index f : g->s_indices) {
      if (f < 0 || f >= static_cast<Index>(layout.size())) {
        throw ConfigError(field + ".grouping", "factor index out of range for layout");
      }
      d *= layout[static_cast<std::size_t>(f)];
    }
    return d;
  }
  if (const auto* u = std::get_if<UnitaryFileSpec>(&sc)) {
    try {
      return static_cast<Index>(read_matrix_file(u->path).dS);
    } catch (const InvalidInput& e) {
      throw ConfigError(field + ".unitary_file", e.what());
    }
  }
  return std::get<HaarStructureSpec>(sc).dS;
}

const std::set<std::string>& allowed_keys(ScenarioKind kind) {
  static const std::set<std::string> teleport = {"version", "scenario", "state", "base_seed",
                                                 "threshold", "output_dir"};
  static const std::set<std::string> sweep = {
      "version",      "scenario",     "layout", "structure_a", "structure_b", "projection_a",
      "projection_b", "state",        "trials", "base_seed",   "threshold",   "output_dir"};
  static const std::set<std::string> qcr = {"version",     "scenario", "layout",
                                            "structure_a", "structure_b", "state",
                                            "trials",      "base_seed",   "threshold",
                                            "output_dir"};
  static const std::set<std::string> dyn = {
      "version",      "scenario",     "layout",     "structure_a", "structure_b",
      "projection_a", "projection_b", "state",      "hamiltonian", "time_grid",
      "base_seed",    "threshold",    "output_dir"};
  switch (kind) {
    case ScenarioKind::TeleportCheck:
      return teleport;
    case ScenarioKind::Lemma1Sweep:
    case ScenarioKind::Lemma2Sweep:
      return sweep;
    case ScenarioKind::QcrDemo:
      return qcr;
    case ScenarioKind::DynamicsTrace:
      return dyn;
  }
  return sweep;
}

}  // namespace

ScenarioConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("<root>", "config must be a JSON object");
  }
  if (!j.contains("version")) {
    throw ConfigError("version", "required");
  }
  ScenarioConfig cfg;
  cfg.version = static_cast<int>(get_int(j["version"], "version"));
  if (cfg.version != 1) {
    throw ConfigError("version", "unsupported version (expected 1)");
  }
  if (!j.contains("scenario")) {
    throw ConfigError("scenario", "required");
  }
  const std::string sname = get_string(j["scenario"], "scenario");
  if (sname == "teleport-check") {
    cfg.scenario = ScenarioKind::TeleportCheck;
  } else if (sname == "lemma1-sweep") {
    cfg.scenario = ScenarioKind::Lemma1Sweep;
  } else if (sname == "lemma2-sweep") {
    cfg.scenario = ScenarioKind::Lemma2Sweep;
  } else if (sname == "qcr-demo") {
    cfg.scenario = ScenarioKind::QcrDemo;
  } else if (sname == "dynamics-trace") {
    cfg.scenario = ScenarioKind::DynamicsTrace;
  } else {
    throw ConfigError("scenario",
                      "must be one of teleport-check, lemma1-sweep, lemma2-sweep, qcr-demo, "
                      "dynamics-trace");
  }
  check_keys(j, "", allowed_keys(cfg.scenario));
  const ScenarioKind kind = cfg.scenario;
  const bool three_qubit_default =
      kind == ScenarioKind::TeleportCheck || kind == ScenarioKind::DynamicsTrace;

  cfg.layout = j.contains("layout") ? parse_index_list(j["layout"], "layout", 2)
                                    : (three_qubit_default ? std::vector<Index>{2, 2, 2}
                                                           : std::vector<Index>{2, 2});
  if (cfg.layout.size() < 2) {
    throw ConfigError("layout", "at least two factors required");
  }

  cfg.structure_a = j.contains("structure_a")
                        ? parse_structure(j["structure_a"], "structure_a", base_dir)
                        : StructureConfig{GroupingSpec{{0}}};
  if (kind == ScenarioKind::TeleportCheck) {
    cfg.structure_b = GroupingSpec{{0, 1}};
  } else if (j.contains("structure_b")) {
    cfg.structure_b = parse_structure(j["structure_b"], "structure_b", base_dir);
  } else if (kind == ScenarioKind::DynamicsTrace) {
    cfg.structure_b = GroupingSpec{{0, 1}};
  } else {
    cfg.structure_b = HaarStructureSpec{structure_dS(cfg.structure_a, cfg.layout, "structure_a")};
  }

  if (j.contains("projection_a")) {
    cfg.projection_a = parse_projection(j["projection_a"], "projection_a", base_dir);
  }
  if (j.contains("projection_b")) {
    cfg.projection_b = parse_projection(j["projection_b"], "projection_b", base_dir);
  }
  if (kind == ScenarioKind::TeleportCheck) {
    cfg.projection_a.rho_ref = "environment";
  }

  cfg.state = j.contains("state") ? parse_state(j["state"], "state") : default_state(kind);

  if (j.contains("hamiltonian")) {
    const json& h = require_object(j["hamiltonian"], "hamiltonian");
    check_keys(h, "hamiltonian", {"seed", "file"});
    if (h.contains("seed") && h.contains("file")) {
      throw ConfigError("hamiltonian", "give either \"seed\" or \"file\", not both");
    }
    if (h.contains("seed")) {
      cfg.hamiltonian.seed = get_u64(h["seed"], "hamiltonian.seed");
    }
    if (h.contains("file")) {
      cfg.hamiltonian.file = resolve(base_dir, get_string(h["file"], "hamiltonian.file"));
    }
  }

  if (j.contains("time_grid")) {
    const json& g = require_object(j["time_grid"], "time_grid");
    check_keys(g, "time_grid", {"t0", "t1", "steps"});
    if (g.contains("t0")) {
      cfg.time_grid.t0 = get_double(g["t0"], "time_grid.t0");
    }
    if (g.contains("t1")) {
      cfg.time_grid.t1 = get_double(g["t1"], "time_grid.t1");
    }
    if (g.contains("steps")) {
      const auto s = get_int(g["steps"], "time_grid.steps");
      if (s < 1) {
        throw ConfigError("time_grid.steps", "must be >= 1");
      }
      cfg.time_grid.steps = static_cast<Index>(s);
    }
    if (!(cfg.time_grid.t1 > cfg.time_grid.t0)) {
      throw ConfigError("time_grid.t1", "must be greater than time_grid.t0");
    }
  }

  if (j.contains("trials")) {
    const auto t = get_int(j["trials"], "trials");
    if (t < 1) {
      throw ConfigError("trials", "must be >= 1");
    }
    cfg.trials = static_cast<Index>(t);
  } else {
    cfg.trials = kind == ScenarioKind::QcrDemo ? 500
                 : (kind == ScenarioKind::Lemma1Sweep || kind == ScenarioKind::Lemma2Sweep)
                     ? 1000
                     : 1;
  }
  if (j.contains("base_seed")) {
    cfg.base_seed = get_u64(j["base_seed"], "base_seed");
  }
  if (j.contains("threshold")) {
    cfg.threshold = get_double(j["threshold"], "threshold");
    if (!(cfg.threshold > 0.0)) {
      throw ConfigError("threshold", "must be positive");
    }
  }
  if (j.contains("output_dir")) {
    cfg.output_dir = resolve(base_dir, get_string(j["output_dir"], "output_dir"));
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("<file>", "cannot read config file '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

// ---------------------------------------------------------------------------
// Building runtime objects

namespace {

Structure build_structure(const StructureConfig& sc, const FactorLayout& layout, Rng* rng,
                          const std::string& field) {
  if (const auto* g = std::get_if<GroupingSpec>(&sc)) {
    try {
      return structure_from_grouping(layout, g->s_indices);
    } catch (const InvalidInput& e) {
      throw ConfigError(field + ".grouping", e.what());
    }
  }
  const Index total = layout.total_dim();
  if (const auto* u = std::get_if<UnitaryFileSpec>(&sc)) {
    MatrixFile mf;
    try {
      mf = read_matrix_file(u->path);
    } catch (const InvalidInput& e) {
      throw ConfigError(field + ".unitary_file", e.what());
    }
    const auto dS = static_cast<Index>(mf.dS);
    if (mf.matrix.rows() != total) {
      throw ConfigError(field + ".unitary_file",
                        "file '" + u->path.string() + "' has dimension " +
                            std::to_string(mf.matrix.rows()) + ", layout needs " +
                            std::to_string(total));
    }
    if (dS < 1 || total % dS != 0) {
      throw ConfigError(field + ".unitary_file", "file '" + u->path.string() +
                                                     "' has a dS header that does not divide " +
                                                     std::to_string(total));
    }
    try {
      return structure_from_unitary(std::move(mf.matrix), dS, total / dS, u->path.filename());
    } catch (const InvalidInput& e) {
      throw ConfigError(field + ".unitary_file", "file '" + u->path.string() + "': " + e.what());
    }
  }
  const Index dS = std::get<HaarStructureSpec>(sc).dS;
  if (dS < 1 || total % dS != 0) {
    throw ConfigError(field + ".haar.dS", "must divide the total dimension " +
                                              std::to_string(total));
  }
  if (rng == nullptr) {
    return Structure::reference(dS, total / dS, "haar");
  }
  return structure_from_unitary(random_unitary(total, *rng), dS, total / dS, "haar");
}

DensityMatrix load_density(const std::filesystem::path& p, Index dim, const std::string& field) {
  try {
    MatrixFile mf = read_matrix_file(p);
    if (mf.matrix.rows() != dim) {
      throw ConfigError(field, "file '" + p.string() + "' has dimension " +
                                   std::to_string(mf.matrix.rows()) + ", expected " +
                                   std::to_string(dim));
    }
    return DensityMatrix(std::move(mf.matrix));
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ConfigError(field, e.what());
  }
}

ComplexMatrix load_square(const std::filesystem::path& p, Index dim, const std::string& field) {
  MatrixFile mf;
  try {
    mf = read_matrix_file(p);
  } catch (const InvalidInput& e) {
    throw ConfigError(field, e.what());
  }
  if (mf.matrix.rows() != dim) {
    throw ConfigError(field, "file '" + p.string() + "' has dimension " +
                                 std::to_string(mf.matrix.rows()) + ", expected " +
                                 std::to_string(dim));
  }
  return std::move(mf.matrix);
}

ProjectionSpec build_projection(const ProjectionConfig& pc, const Structure& s,
                                const DensityMatrix& rho, const std::string& field) {
  const Index dS = s.dS();
  const Index dE = s.dE();
  try {
    switch (pc.kind) {
      case ProjectionConfig::Kind::TypeI: {
        if (pc.rho_ref == "maximally_mixed") {
          return ProjectionSpec::type_i(DensityMatrix::maximally_mixed(dE));
        }
        if (pc.rho_ref == "environment") {
          ComplexMatrix env = reduced_operator(rho.matrix(), s, Part::E);
          env = 0.5 * (env + env.adjoint()).eval();
          return ProjectionSpec::type_i(DensityMatrix(std::move(env)));
        }
        return ProjectionSpec::type_i(load_density(pc.rho_ref, dE, field + ".rho_ref"));
      }
      case ProjectionConfig::Kind::TypeII: {
        std::vector<ProjectionBin> bins;
        if (pc.computational_bins) {
          if (dS > dE) {
            throw ConfigError(field + ".bins",
                              "computational bins need dS <= dE for orthogonal supports");
          }
          for (Index n = 0; n < dS; ++n) {
            ComplexMatrix p = ComplexMatrix::Zero(dS, dS);
            p(n, n) = 1.0;
            ComplexMatrix r = ComplexMatrix::Zero(dE, dE);
            r(n, n) = 1.0;
            bins.push_back({std::move(p), DensityMatrix(std::move(r))});
          }
        } else {
          for (std::size_t k = 0; k < pc.bins.size(); ++k) {
            const std::string bf = field + ".bins[" + std::to_string(k) + "]";
            bins.push_back({load_square(pc.bins[k].first, dS, bf + ".projector"),
                            load_density(pc.bins[k].second, dE, bf + ".rho")});
          }
        }
        return ProjectionSpec::type_ii(std::move(bins));
      }
      case ProjectionConfig::Kind::TypeIII: {
        if (pc.basis == "computational") {
          return ProjectionSpec::type_iii_from_basis(ComplexMatrix::Identity(dE, dE));
        }
        return ProjectionSpec::type_iii_from_basis(load_square(pc.basis, dE, field + ".basis"));
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ConfigError(field, e.what());
  }
  throw ConfigError(field, "unknown projection kind");
}

DensityMatrix draw_state(const StateConfig& sc, Index trial, const Structure& sA, Rng& rng,
                         std::string& kind_out) {
  const Index dim = sA.total_dim();
  StateConfig::Kind kind = sc.kind;
  if (kind == StateConfig::Kind::Alternating) {
    kind = trial % 2 == 0 ? StateConfig::Kind::HaarPure : StateConfig::Kind::Ginibre;
  }
  kind_out = state_kind_name(kind);
  switch (kind) {
    case StateConfig::Kind::HaarPure:
      return DensityMatrix::from_pure(random_pure(dim, rng));
    case StateConfig::Kind::Ginibre:
      return random_density(dim, sc.rank, rng);
    case StateConfig::Kind::Product: {
      const DensityMatrix rs = random_density(sA.dS(), sA.dS(), rng);
      const DensityMatrix re = random_density(sA.dE(), sA.dE(), rng);
      ComplexMatrix m = from_structure_basis(kron(rs.matrix(), re.matrix()), sA);
      m = 0.5 * (m + m.adjoint()).eval();
      return DensityMatrix(std::move(m));
    }
    case StateConfig::Kind::Teleport:
      return DensityMatrix::from_pure(teleport_state(PureState(sc.u)));
    case StateConfig::Kind::Alternating:
      break;
  }
  throw ConfigError("state.kind", "unsupported");
}

// Runs body(i) for i in [0, n) on a worker pool. Results are written by index by
// the caller, so the output does not depend on scheduling. The exception of
// the lowest failing index is rethrown.
void parallel_for(Index n, unsigned workers, const std::function<void(Index)>& body) {
  if (workers == 0) {
    workers = std::max(1U, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<Index>(workers, n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<Index> next{0};
  auto worker = [&] {
    for (Index i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(worker);
    }
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

struct Stats {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  Index count = 0;
  Index above = 0;

  void add(double x, double threshold) {
    min = std::min(min, x);
    max = std::max(max, x);
    sum += x;
    ++count;
    if (x > threshold) {
      ++above;
    }
  }
  json to_json(const std::string& prefix) const {
    json j;
    j[prefix + "_min"] = min;
    j[prefix + "_max"] = max;
    j[prefix + "_mean"] = count > 0 ? sum / static_cast<double>(count) : 0.0;
    j[prefix + "_fraction_above_threshold"] =
        count > 0 ? static_cast<double>(above) / static_cast<double>(count) : 0.0;
    return j;
  }
};

json config_to_json(const ScenarioConfig& cfg);

json summary_header(const ScenarioConfig& cfg) {
  json j;
  j["scenario"] = to_string(cfg.scenario);
  j["config"] = config_to_json(cfg);
  j["base_seed"] = cfg.base_seed;
  j["generator"] = {{"name", std::string(kGeneratorName)}, {"version", kGeneratorVersion}};
  j["threshold"] = cfg.threshold;
  return j;
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) {
    return v;
  }
  std::string out = "\"";
  for (char c : v) {
    out += c;
    if (c == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

void require_invariant(bool ok, const std::string& what) {
  if (!ok) {
    throw InvariantViolation(what);
  }
}

// ---------------------------------------------------------------------------
// Scenarios

Report run_teleport(const ScenarioConfig& cfg) {
  const FactorLayout layout({2, 2, 2});
  const Structure sA = structure_from_grouping(layout, {0});
  const Structure sB = structure_from_grouping(layout, {0, 1});
  const PureState psi = teleport_state(PureState(cfg.state.u));
  const DensityMatrix rho = DensityMatrix::from_pure(psi);

  const ProjectionSpec specA = build_projection(cfg.projection_a, sA, rho, "projection_a");
  const ProjectionSpec specB = build_projection(cfg.projection_b, sB, rho, "projection_b");

  const ComplexMatrix p_rho = project(rho, sA, specA);
  const ComplexMatrix pp_rho = project(rho, sB, specB);
  const double purity_p = (p_rho * p_rho).trace().real();
  const double purity_pp = (pp_rho * pp_rho).trace().real();
  const double fixed_point_defect = trace_norm(p_rho - rho.matrix());
  const double l2 = lemma2_defect(rho, sA, specA, sB, specB);
  const DefectReport ab = cross_relevance_matrix(rho, sA, specA, sB);
  const DefectReport ba = cross_relevance_matrix(rho, sB, specB, sA);
  const DensityMatrix rs = reduced_state(rho, sA, Part::S);
  const DensityMatrix rsp = reduced_state(rho, sB, Part::S);
  const RealVector spec_s = rs.eigenvalues();
  const RealVector spec_sp = rsp.eigenvalues();

  const double rel_a = relevance_defect(rho, sA, specA);
  const double rel_b = relevance_defect(rho, sB, specB);
  require_invariant(rel_a <= tol::kTraceResidual && rel_b <= tol::kTraceResidual,
                    "teleport-check: relevance identity violated");
  require_invariant(fixed_point_defect <= tol::kTraceResidual,
                    "teleport-check: P rho != rho for the 1|(2,3) split");
  require_invariant(l2 > cfg.threshold,
                    "teleport-check: projectors for the two splits commute on this state");

  json j = summary_header(cfg);
  j["statistics"] = {
      {"purity_P_rho", purity_p},
      {"purity_Pprime_rho", purity_pp},
      {"fixed_point_defect", fixed_point_defect},
      {"lemma2_defect", l2},
      {"lemma1_AtoB_tracenorm", ab.trace_norm_defect},
      {"lemma1_BtoA_tracenorm", ba.trace_norm_defect},
      {"trace_residual_max", std::max(ab.trace_residual, ba.trace_residual)},
      {"relevance_defect_A", rel_a},
      {"relevance_defect_B", rel_b},
      {"purity_S", rs.purity()},
      {"purity_Sprime", rsp.purity()},
      {"spectrum_S", std::vector<double>(spec_s.begin(), spec_s.end())},
      {"spectrum_Sprime", std::vector<double>(spec_sp.begin(), spec_sp.end())},
  };
  j["structures"] = {{"A", sA.label()}, {"B", sB.label()}};

  std::ostringstream csv;
  csv << "structure,label,index,eigenvalue\n";
  for (Index k = 0; k < spec_s.size(); ++k) {
    csv << "A," << csv_field(sA.label()) << "," << k << "," << format_double(spec_s(k)) << "\n";
  }
  for (Index k = 0; k < spec_sp.size(); ++k) {
    csv << "B," << csv_field(sB.label()) << "," << k << "," << format_double(spec_sp(k)) << "\n";
  }
  return {j.dump(2) + "\n", csv.str()};
}

struct SweepRow {
  std::uint64_t seed = 0;
  std::string state;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f = std::numeric_limits<double>::quiet_NaN();
};

Report run_lemma1(const ScenarioConfig& cfg, unsigned workers) {
  const FactorLayout layout(cfg.layout);
  std::vector<SweepRow> rows(static_cast<std::size_t>(cfg.trials));
  parallel_for(cfg.trials, workers, [&](Index trial) {
    SweepRow& row = rows[static_cast<std::size_t>(trial)];
    row.seed = derive_seed(cfg.base_seed, static_cast<std::uint64_t>(trial));
    Rng rng(row.seed);
    const Structure sA = build_structure(cfg.structure_a, layout, &rng, "structure_a");
    const DensityMatrix rho = draw_state(cfg.state, trial, sA, rng, row.state);
    const Structure sB = build_structure(cfg.structure_b, layout, &rng, "structure_b");
    const ProjectionSpec specA = build_projection(cfg.projection_a, sA, rho, "projection_a");
    const ProjectionSpec specB = build_projection(cfg.projection_b, sB, rho, "projection_b");

    const DefectReport ab = cross_relevance_matrix(rho, sA, specA, sB);
    const DefectReport ba = cross_relevance_matrix(rho, sB, specB, sA);
    const DefectReport same = cross_relevance_matrix(rho, sA, specA, sA);
    require_invariant(same.trace_norm_defect <= tol::kTraceResidual,
                      "lemma1-sweep: same-structure relevance defect " +
                          format_double(same.trace_norm_defect) + " at trial " +
                          std::to_string(trial));
    row.a = ab.trace_norm_defect;
    row.b = ab.frobenius_defect;
    row.c = ba.trace_norm_defect;
    row.d = same.trace_norm_defect;
    row.e = std::max({ab.trace_residual, ba.trace_residual, same.trace_residual});
    if (row.state == "haar_pure" && specA.kind() == ProjectionKind::TypeI) {
      // Coefficient-formula route for the same matrix; psi is fixed up to a phase.
      const EigenSystem es = eigh(rho.matrix());
      const PureState psi = PureState::normalized(es.vectors.col(es.values.size() - 1));
      const ComplexMatrix coeff = coeff_A_pure(psi, sA, specA.type_i_data()->rho_ref, sB);
      row.f = (coeff - ab.defect_matrix).cwiseAbs().maxCoeff();
    }
  });

  Stats ab_stats;
  Stats ba_stats;
  double max_same = 0.0;
  double max_residual = 0.0;
  double max_oracle = 0.0;
  std::ostringstream csv;
  csv << "trial,seed,state,defect_AtoB_tracenorm,defect_AtoB_frobenius,defect_BtoA_tracenorm,"
         "same_structure_tracenorm,trace_residual,oracle_max_abs_diff\n";
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const SweepRow& r = rows[t];
    ab_stats.add(r.a, cfg.threshold);
    ba_stats.add(r.c, cfg.threshold);
    max_same = std::max(max_same, r.d);
    max_residual = std::max(max_residual, r.e);
    if (!std::isnan(r.f)) {
      max_oracle = std::max(max_oracle, r.f);
    }
    csv << t << "," << r.seed << "," << r.state << "," << format_double(r.a) << ","
        << format_double(r.b) << "," << format_double(r.c) << "," << format_double(r.d) << ","
        << format_double(r.e) << "," << format_double(r.f) << "\n";
  }
  json j = summary_header(cfg);
  json stats = ab_stats.to_json("defect_AtoB");
  stats.update(ba_stats.to_json("defect_BtoA"));
  stats["fraction_above_threshold"] = stats["defect_AtoB_fraction_above_threshold"];
  stats["same_structure_defect_max"] = max_same;
  stats["trace_residual_max"] = max_residual;
  stats["oracle_max_abs_diff"] = max_oracle;
  stats["trials"] = cfg.trials;
  j["statistics"] = stats;
  return {j.dump(2) + "\n", csv.str()};
}

Report run_lemma2(const ScenarioConfig& cfg, unsigned workers) {
  const FactorLayout layout(cfg.layout);
  std::vector<SweepRow> rows(static_cast<std::size_t>(cfg.trials));
  parallel_for(cfg.trials, workers, [&](Index trial) {
    SweepRow& row = rows[static_cast<std::size_t>(trial)];
    row.seed = derive_seed(cfg.base_seed, static_cast<std::uint64_t>(trial));
    Rng rng(row.seed);
    const Structure sA = build_structure(cfg.structure_a, layout, &rng, "structure_a");
    const DensityMatrix rho = draw_state(cfg.state, trial, sA, rng, row.state);
    const Structure sB = build_structure(cfg.structure_b, layout, &rng, "structure_b");
    const ProjectionSpec specA = build_projection(cfg.projection_a, sA, rho, "projection_a");
    const ProjectionSpec specB = build_projection(cfg.projection_b, sB, rho, "projection_b");
    row.a = lemma2_defect(rho, sA, specA, sB, specB);
    row.b = lemma2_defect(rho, sB, specB, sA, specA);
    row.c = lemma2_defect(rho, sA, specA, sA, specA);
    require_invariant(row.c <= tol::kTraceResidual,
                      "lemma2-sweep: projector does not commute with itself at trial " +
                          std::to_string(trial));
  });

  Stats stats;
  double max_same = 0.0;
  double max_asym = 0.0;
  std::ostringstream csv;
  csv << "trial,seed,state,lemma2_tracenorm,lemma2_reversed_tracenorm,same_structure_tracenorm\n";
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const SweepRow& r = rows[t];
    stats.add(r.a, cfg.threshold);
    max_same = std::max(max_same, r.c);
    max_asym = std::max(max_asym, std::abs(r.a - r.b));
    csv << t << "," << r.seed << "," << r.state << "," << format_double(r.a) << ","
        << format_double(r.b) << "," << format_double(r.c) << "\n";
  }
  json j = summary_header(cfg);
  json s = stats.to_json("lemma2");
  s["fraction_above_threshold"] = s["lemma2_fraction_above_threshold"];
  s["same_structure_defect_max"] = max_same;
  s["symmetry_gap_max"] = max_asym;
  s["trials"] = cfg.trials;
  j["statistics"] = s;
  return {j.dump(2) + "\n", csv.str()};
}

Report run_qcr(const ScenarioConfig& cfg, unsigned workers) {
  const FactorLayout layout(cfg.layout);
  std::vector<SweepRow> rows(static_cast<std::size_t>(cfg.trials));
  parallel_for(cfg.trials, workers, [&](Index trial) {
    SweepRow& row = rows[static_cast<std::size_t>(trial)];
    row.seed = derive_seed(cfg.base_seed, static_cast<std::uint64_t>(trial));
    Rng rng(row.seed);
    const Structure sA = build_structure(cfg.structure_a, layout, &rng, "structure_a");
    const DensityMatrix rho = draw_state(cfg.state, trial, sA, rng, row.state);
    const Structure sB = build_structure(cfg.structure_b, layout, &rng, "structure_b");
    row.a = mutual_information(rho, sA);
    row.b = mutual_information(rho, sB);
  });

  Stats own;
  Stats alt;
  std::ostringstream csv;
  csv << "trial,seed,state,mi_own,mi_alternate\n";
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const SweepRow& r = rows[t];
    own.add(r.a, cfg.threshold);
    alt.add(r.b, cfg.threshold);
    csv << t << "," << r.seed << "," << r.state << "," << format_double(r.a) << ","
        << format_double(r.b) << "\n";
  }
  json j = summary_header(cfg);
  json s = own.to_json("mi_own");
  s.update(alt.to_json("mi_alternate"));
  s["fraction_above_threshold"] = s["mi_alternate_fraction_above_threshold"];
  s["trials"] = cfg.trials;
  j["statistics"] = s;
  return {j.dump(2) + "\n", csv.str()};
}

Hamiltonian build_hamiltonian(const ScenarioConfig& cfg, Index dim) {
  if (cfg.hamiltonian.file) {
    ComplexMatrix m = load_square(*cfg.hamiltonian.file, dim, "hamiltonian.file");
    try {
      return Hamiltonian(std::move(m));
    } catch (const InvalidInput& e) {
      throw ConfigError("hamiltonian.file", e.what());
    }
  }
  const std::uint64_t seed = cfg.hamiltonian.seed ? *cfg.hamiltonian.seed
                                                  : derive_seed(cfg.base_seed, 1);
  return random_hamiltonian(dim, seed);
}

Report run_dynamics(const ScenarioConfig& cfg) {
  const FactorLayout layout(cfg.layout);
  Rng rng(derive_seed(cfg.base_seed, 0));
  const Structure sA = build_structure(cfg.structure_a, layout, &rng, "structure_a");
  std::string state_kind;
  const DensityMatrix rho0 = draw_state(cfg.state, 0, sA, rng, state_kind);
  const Structure sB = build_structure(cfg.structure_b, layout, &rng, "structure_b");
  const ProjectionSpec specA = build_projection(cfg.projection_a, sA, rho0, "projection_a");
  const ProjectionSpec specB = build_projection(cfg.projection_b, sB, rho0, "projection_b");
  const Hamiltonian h = build_hamiltonian(cfg, layout.total_dim());
  const TimeGrid grid(cfg.time_grid.t0, cfg.time_grid.t1, cfg.time_grid.steps);

  const TrajectoryRecord rec = trajectory(rho0, h, grid, sA, specA, sB, specB);

  Stats ab;
  double max_residual = 0.0;
  std::ostringstream csv;
  csv << "t,lemma1_AtoB_tracenorm,lemma1_BtoA_tracenorm,lemma1_trace_residual_max,"
         "lemma2_tracenorm,mi_A,mi_B,purity_S,purity_Sprime\n";
  for (const auto& p : rec.points) {
    ab.add(p.lemma1_AtoB, cfg.threshold);
    max_residual = std::max(max_residual, p.lemma1_trace_residual_max);
    csv << format_double(p.t) << "," << format_double(p.lemma1_AtoB) << ","
        << format_double(p.lemma1_BtoA) << "," << format_double(p.lemma1_trace_residual_max)
        << "," << format_double(p.lemma2.value_or(std::numeric_limits<double>::quiet_NaN()))
        << "," << format_double(p.mi_A) << "," << format_double(p.mi_B) << ","
        << format_double(p.purity_S) << "," << format_double(p.purity_Sprime) << "\n";
  }
  json j = summary_header(cfg);
  json s = ab.to_json("lemma1_AtoB");
  s["fraction_above_threshold"] = s["lemma1_AtoB_fraction_above_threshold"];
  s["trace_residual_max"] = max_residual;
  s["points"] = rec.points.size();
  s["hamiltonian_frobenius_norm"] = h.matrix().norm();
  s["initial_state"] = state_kind;
  j["statistics"] = s;
  j["structures"] = {{"A", rec.structure_A}, {"B", rec.structure_B}};
  return {j.dump(2) + "\n", csv.str()};
}

json structure_to_json(const StructureConfig& sc) {
  if (const auto* g = std::get_if<GroupingSpec>(&sc)) {
    return {{"grouping", g->s_indices}};
  }
  if (const auto* u = std::get_if<UnitaryFileSpec>(&sc)) {
    return {{"unitary_file", u->path.string()}};
  }
  return {{"haar", {{"dS", std::get<HaarStructureSpec>(sc).dS}}}};
}

json projection_to_json(const ProjectionConfig& pc) {
  json j;
  j["kind"] = projection_kind_name(pc.kind);
  switch (pc.kind) {
    case ProjectionConfig::Kind::TypeI:
      j["rho_ref"] = pc.rho_ref;
      break;
    case ProjectionConfig::Kind::TypeII:
      if (pc.computational_bins) {
        j["bins"] = "computational";
      } else {
        j["bins"] = json::array();
        for (const auto& [p, r] : pc.bins) {
          j["bins"].push_back({{"projector", p.string()}, {"rho", r.string()}});
        }
      }
      break;
    case ProjectionConfig::Kind::TypeIII:
      j["basis"] = pc.basis;
      break;
  }
  return j;
}

json config_to_json(const ScenarioConfig& cfg) {
  json j;
  j["version"] = cfg.version;
  j["scenario"] = to_string(cfg.scenario);
  j["base_seed"] = cfg.base_seed;
  j["threshold"] = cfg.threshold;
  j["output_dir"] = cfg.output_dir.string();
  json state;
  state["kind"] = state_kind_name(cfg.state.kind);
  if (cfg.state.kind == StateConfig::Kind::Ginibre ||
      cfg.state.kind == StateConfig::Kind::Alternating) {
    state["rank"] = cfg.state.rank;
  }
  if (cfg.state.kind == StateConfig::Kind::Teleport) {
    state["u"] = json::array();
    for (Index k = 0; k < 2; ++k) {
      state["u"].push_back({cfg.state.u(k).real(), cfg.state.u(k).imag()});
    }
  }
  j["state"] = state;
  if (cfg.scenario == ScenarioKind::TeleportCheck) {
    return j;
  }
  j["layout"] = cfg.layout;
  j["structure_a"] = structure_to_json(cfg.structure_a);
  j["structure_b"] = structure_to_json(cfg.structure_b);
  if (cfg.scenario != ScenarioKind::QcrDemo) {
    j["projection_a"] = projection_to_json(cfg.projection_a);
    j["projection_b"] = projection_to_json(cfg.projection_b);
  }
  if (cfg.scenario == ScenarioKind::DynamicsTrace) {
    json h = json::object();
    if (cfg.hamiltonian.seed) {
      h["seed"] = *cfg.hamiltonian.seed;
    }
    if (cfg.hamiltonian.file) {
      h["file"] = cfg.hamiltonian.file->string();
    }
    j["hamiltonian"] = h;
    j["time_grid"] = {{"t0", cfg.time_grid.t0},
                      {"t1", cfg.time_grid.t1},
                      {"steps", cfg.time_grid.steps}};
  } else {
    j["trials"] = cfg.trials;
  }
  return j;
}

void write_atomically(const std::filesystem::path& target, const std::string& content) {
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot write '" + tmp.string() + "'");
    }
    out << content;
    if (!out) {
      throw Error("write failed for '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

std::string canonical_json(const ScenarioConfig& cfg) {
  return config_to_json(cfg).dump(2);
}

void validate(const ScenarioConfig& cfg) {
  if (cfg.version != 1) {
    throw ConfigError("version", "unsupported version (expected 1)");
  }
  if (cfg.trials < 1) {
    throw ConfigError("trials", "must be >= 1");
  }
  if (cfg.time_grid.steps < 1) {
    throw ConfigError("time_grid.steps", "must be >= 1");
  }
  if (!(cfg.time_grid.t1 > cfg.time_grid.t0)) {
    throw ConfigError("time_grid.t1", "must be greater than time_grid.t0");
  }
  if (!(cfg.threshold > 0.0)) {
    throw ConfigError("threshold", "must be positive");
  }
  if (cfg.scenario == ScenarioKind::TeleportCheck) {
    if (cfg.state.kind != StateConfig::Kind::Teleport) {
      throw ConfigError("state.kind", "teleport-check requires state kind teleport");
    }
    return;
  }
  std::optional<FactorLayout> layout;
  try {
    layout.emplace(cfg.layout);
  } catch (const InvalidInput& e) {
    throw ConfigError("layout", e.what());
  }
  const Structure sA = build_structure(cfg.structure_a, *layout, nullptr, "structure_a");
  const Structure sB = build_structure(cfg.structure_b, *layout, nullptr, "structure_b");

  if (cfg.state.kind == StateConfig::Kind::Teleport &&
      cfg.layout != std::vector<Index>{2, 2, 2}) {
    throw ConfigError("state.kind", "teleport state needs layout [2, 2, 2]");
  }
  if ((cfg.state.kind == StateConfig::Kind::Ginibre ||
       cfg.state.kind == StateConfig::Kind::Alternating) &&
      cfg.state.rank > layout->total_dim()) {
    throw ConfigError("state.rank", "must not exceed the total dimension");
  }
  if (cfg.scenario == ScenarioKind::QcrDemo && cfg.state.kind != StateConfig::Kind::Product) {
    throw ConfigError("state.kind", "qcr-demo requires state kind product");
  }
  if (cfg.scenario == ScenarioKind::QcrDemo) {
    return;
  }
  const DensityMatrix probe = DensityMatrix::maximally_mixed(layout->total_dim());
  const ProjectionSpec specA = build_projection(cfg.projection_a, sA, probe, "projection_a");
  const ProjectionSpec specB = build_projection(cfg.projection_b, sB, probe, "projection_b");
  if (cfg.scenario == ScenarioKind::Lemma2Sweep) {
    if (specA.kind() != ProjectionKind::TypeI) {
      throw ConfigError("projection_a.kind", "lemma2-sweep supports type_i only");
    }
    if (specB.kind() != ProjectionKind::TypeI) {
      throw ConfigError("projection_b.kind", "lemma2-sweep supports type_i only");
    }
  }
  if (cfg.scenario == ScenarioKind::DynamicsTrace) {
    build_hamiltonian(cfg, layout->total_dim());
  }
}

Report execute(const ScenarioConfig& cfg, unsigned workers) {
  validate(cfg);
  switch (cfg.scenario) {
    case ScenarioKind::TeleportCheck:
      return run_teleport(cfg);
    case ScenarioKind::Lemma1Sweep:
      return run_lemma1(cfg, workers);
    case ScenarioKind::Lemma2Sweep:
      return run_lemma2(cfg, workers);
    case ScenarioKind::QcrDemo:
      return run_qcr(cfg, workers);
    case ScenarioKind::DynamicsTrace:
      return run_dynamics(cfg);
  }
  throw ConfigError("scenario", "unknown scenario");
}

void write_report(const Report& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_atomically(dir / "summary.json", report.summary_json);
  write_atomically(dir / "series.csv", report.series_csv);
}

Report run(const ScenarioConfig& cfg, unsigned workers) {
  Report r = execute(cfg, workers);
  write_report(r, cfg.output_dir);
  return r;
}

}  // namespace tpslab
