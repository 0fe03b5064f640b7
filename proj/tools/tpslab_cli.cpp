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


// tpslab: run or validate scenario configs.
//
//   tpslab run <config.json> [--output-dir DIR] [--seed N] [--trials N] [--workers N]
//   tpslab validate <config.json>
//
// Exit codes: 0 success, 1 configuration or input error, 2 invariant violation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tpslab/errors.hpp"
#include "tpslab/scenario.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitInvariant = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tpslab: tensor-product-structure scenarios"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  std::optional<std::uint64_t> seed;
  std::optional<long long> trials;
  unsigned workers = 0;

  auto* run = app.add_subcommand("run", "Run a scenario and write summary.json and series.csv");
  run->add_option("config", config_path, "Scenario config (JSON)")->required();
  run->add_option("--output-dir", output_dir, "Override output_dir");
  run->add_option("--seed", seed, "Override base_seed");
  run->add_option("--trials", trials, "Override trials");
  run->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");

  auto* validate = app.add_subcommand("validate", "Check a config and print its canonical form");
  validate->add_option("config", config_path, "Scenario config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    tpslab::ScenarioConfig cfg = tpslab::load_config(config_path);
    if (!output_dir.empty()) {
      cfg.output_dir = output_dir;
    }
    if (seed) {
      cfg.base_seed = *seed;
    }
    if (trials) {
      if (*trials < 1) {
        throw tpslab::ConfigError("trials", "must be >= 1");
      }
      cfg.trials = static_cast<tpslab::Index>(*trials);
    }
    tpslab::validate(cfg);
    if (validate->parsed()) {
      std::cout << tpslab::canonical_json(cfg) << "\n";
      return 0;
    }
    tpslab::run(cfg, workers);
    std::cout << "wrote " << (cfg.output_dir / "summary.json").string() << " and "
              << (cfg.output_dir / "series.csv").string() << "\n";
    return 0;
  } catch (const tpslab::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const tpslab::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const tpslab::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
