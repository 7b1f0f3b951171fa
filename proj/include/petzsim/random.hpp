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

#ifndef PETZSIM_RANDOM_HPP
#define PETZSIM_RANDOM_HPP

#include <cstdint>
#include <random>

#include "petzsim/channel.hpp"

namespace petzsim {

/// Seeded generator for reproducible instances. All randomized experiment
/// inputs flow through this class.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  double gaussian();
  int randint(int lo, int hi); // inclusive bounds

  ComplexMatrix gaussian_matrix(int rows, int cols);
  ComplexMatrix haar_unitary(int n);
  ComplexVector random_pure(int dim);

  /// Wishart state mixed toward the identity: (1-mix)*rho + mix*I/d.
  DensityMatrix random_density(int dim, double mix = 0.0);

  /// Channel from a Haar-random isometry with d_env Kraus operators.
  QuantumChannel random_channel(int dim_in, int dim_out, int d_env);

  /// Column-stochastic matrix with entries bounded away from zero.
  RealMatrix random_stochastic(int rows, int cols, double floor = 0.02);

  RealVector random_distribution(int n, double floor = 0.05);

private:
  std::mt19937_64 gen_;
};

} // namespace petzsim

#endif // PETZSIM_RANDOM_HPP
