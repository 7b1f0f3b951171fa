// Copyright 2026 The petzsim developers
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

#ifndef PETZSIM_EXPERIMENTS_HPP
#define PETZSIM_EXPERIMENTS_HPP

#include <optional>
#include <string>

#include "petzsim/serialize.hpp"

namespace petzsim {

enum class ExperimentKind { kRecover, kPgm, kSearch, kSweep, kBayes };

/// Parsed experiment configuration. The JSON schema is strict: a version
/// field is required, unknown fields are rejected with their path, and a
/// seed is mandatory whenever the instance is randomized.
struct ExperimentConfig {
  int version = 1;
  ExperimentKind kind = ExperimentKind::kRecover;
  std::uint64_t seed = 0;
  double eps = 0.1;
  int repetitions = 1;
  Json instance; // kind-specific parameters, already validated
  Json echo;     // the full normalized config for record embedding
};

ExperimentConfig parse_config(const Json& j);
ExperimentConfig default_config(ExperimentKind kind);
ExperimentKind kind_from_name(const std::string& name);

struct RunOutput {
  Json record;                 // deterministic JSON result record
  std::string csv;             // header + one row per result
  bool certification_ok = true;
  std::string failure_detail;  // stage name when certification failed
};

/// Runs the experiment. Deterministic given (seed, config): identical calls
/// produce byte-identical `record` dumps and `csv` text. Certification
/// failures from pipeline stages are captured, not thrown.
RunOutput run_config(const ExperimentConfig& cfg);

/// Modeled-query scaling table over a (d_env, kappa) grid using weighted
/// search-style instances; one row per grid point, with the closed-form
/// query formula and the measured/formula ratio.
RunOutput complexity_sweep(const std::vector<int>& d_env_values,
                           const std::vector<double>& kappa_values, double eps,
                           std::uint64_t seed);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Compact cross-module invariant suite for the CLI `verify` subcommand.
std::vector<VerifyCheck> verify_suite(std::uint64_t seed);

/// Fixed CSV column list shared by all experiment kinds (documented in
/// docs/result_schema.json).
const std::vector<std::string>& csv_columns();

} // namespace petzsim

#endif // PETZSIM_EXPERIMENTS_HPP
