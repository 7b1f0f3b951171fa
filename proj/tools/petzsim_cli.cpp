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

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "petzsim/experiments.hpp"

namespace {

using petzsim::ExperimentConfig;
using petzsim::ExperimentKind;
using petzsim::Json;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<double> eps;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file");
  cmd->add_option("--seed", opts.seed, "RNG seed (overrides config)");
  cmd->add_option("--out", opts.out_path, "output file path");
  cmd->add_option("--eps", opts.eps, "target accuracy (overrides config)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

ExperimentConfig load_config(ExperimentKind kind, const CommonOpts& opts) {
  Json j;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in)
      throw std::invalid_argument("cannot open config file " + opts.config_path);
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw std::invalid_argument("config parse error in " + opts.config_path +
                                  ": " + e.what());
    }
  } else {
    j = petzsim::default_config(kind).echo;
  }
  if (opts.seed) j["seed"] = *opts.seed;
  if (opts.eps) j["eps"] = *opts.eps;
  ExperimentConfig cfg = petzsim::parse_config(j);
  if (cfg.kind != kind)
    throw std::invalid_argument("config experiment kind does not match the "
                                "subcommand");
  return cfg;
}

int run_experiment(ExperimentKind kind, const CommonOpts& opts) {
  const ExperimentConfig cfg = load_config(kind, opts);
  const auto t0 = std::chrono::steady_clock::now();
  const petzsim::RunOutput out = petzsim::run_config(cfg);
  const auto t1 = std::chrono::steady_clock::now();
  const double ms =
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() /
      1000.0;

  const std::string payload =
      opts.format == "csv" ? out.csv : out.record.dump(1) + "\n";
  if (!opts.out_path.empty()) {
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + opts.out_path);
    f << payload;
  } else {
    std::cout << payload;
  }
  // Wall time goes to stderr: the output payload stays byte-reproducible.
  std::cerr << "completed in " << ms << " ms\n";
  if (!out.certification_ok) {
    std::cerr << "certification failure at stage: " << out.failure_detail
              << "\n";
    return 2;
  }
  return 0;
}

int run_verify(std::uint64_t seed) {
  bool all_pass = true;
  for (const auto& check : petzsim::verify_suite(seed)) {
    std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << " ("
              << check.detail << ")\n";
    all_pass = all_pass && check.pass;
  }
  return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense-matrix simulator for Petz recovery channels and pretty "
               "good measurements"};
  app.require_subcommand(1);

  std::map<std::string, ExperimentKind> kinds = {
      {"recover", ExperimentKind::kRecover},
      {"pgm", ExperimentKind::kPgm},
      {"search", ExperimentKind::kSearch},
      {"sweep", ExperimentKind::kSweep},
      {"bayes", ExperimentKind::kBayes},
  };
  std::map<std::string, CommonOpts> opts;
  for (auto& [name, kind] : kinds) {
    CLI::App* cmd = app.add_subcommand(
        name, name == "recover" ? "run recovery-channel instances"
              : name == "pgm"   ? "pretty good measurement instances"
              : name == "search" ? "unstructured-search recovery demo"
              : name == "sweep" ? "query-count scaling over a (d_E, kappa) grid"
                                : "classical Bayes reversal checks");
    add_common(cmd, opts[name]);
  }
  std::uint64_t verify_seed = 20240817;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the cross-module invariant suite");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify_seed);
    for (auto& [name, kind] : kinds)
      if (app.get_subcommand(name)->parsed())
        return run_experiment(kind, opts[name]);
    return 1;
  } catch (const petzsim::CertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
