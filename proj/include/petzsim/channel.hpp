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

#ifndef PETZSIM_CHANNEL_HPP
#define PETZSIM_CHANNEL_HPP

#include <vector>

#include "petzsim/linalg.hpp"

namespace petzsim {

//=========================================================================
// Channels in Kraus form
//=========================================================================

/// Completely positive map given by a Kraus list; no trace condition.
struct CPMap {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<ComplexMatrix> kraus;
};

/// Trace-preserving quantum channel. The Kraus closure sum K_i^† K_i must
/// equal the identity within `tp_tolerance` at construction (pipelines that
/// produce approximately trace-preserving output pass a relaxed tolerance).
class QuantumChannel {
public:
  QuantumChannel(int dim_in, int dim_out, std::vector<ComplexMatrix> kraus,
                 double tp_tolerance = 1e-9);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  int kraus_count() const { return static_cast<int>(kraus_.size()); }

  /// Max-norm deviation of sum K_i^† K_i from the identity.
  double tp_defect() const;

private:
  int dim_in_, dim_out_;
  std::vector<ComplexMatrix> kraus_;
};

ComplexMatrix apply(const QuantumChannel& c, const ComplexMatrix& rho);
ComplexMatrix apply(const CPMap& c, const ComplexMatrix& rho);

/// Hilbert-Schmidt adjoint: omega -> sum K_i^† omega K_i.
ComplexMatrix adjoint_apply(const QuantumChannel& c, const ComplexMatrix& omega);

//=========================================================================
// Isometric extension (Stinespring dilation)
//=========================================================================

struct IsometricExtension {
  int dim_env = 0;       // d_E, environment dimension
  int dim_env_in = 0;    // d_E', input-side ancilla of the dilation
  ComplexMatrix isometry;          // (d_E*d_B) x d_A, V|psi> = Σ_i |i>⊗K_i|psi>
  ComplexMatrix dilation_unitary;  // square on E'⊗A -> E⊗B; U|0>_{E'} = V
};

/// Stinespring dilation with environment dimension d_env (defaults to the
/// Kraus count, padded up with zero operators until d_A divides d_E*d_B so
/// that the dilation unitary is square).
IsometricExtension isometric_extension(const QuantumChannel& c, int d_env = 0);

/// Adjoint computed through the dilation unitary and the unnormalized
/// maximally entangled operator on E⊗Ẽ, tracing out Ẽ. Agrees with
/// adjoint_apply; kept as an independent route for cross-checking.
ComplexMatrix adjoint_apply_via_dilation(const IsometricExtension& ext,
                                         int dim_in, int dim_out,
                                         const ComplexMatrix& omega);

//=========================================================================
// Named channel constructors
//=========================================================================

QuantumChannel unitary_channel(const ComplexMatrix& u);
QuantumChannel depolarizing(int dim, double p);
QuantumChannel amplitude_damping(double gamma);
QuantumChannel dephasing(double p);
/// Discards the first factor of a d_X⊗d_B input.
QuantumChannel partial_trace_channel(int d_x, int d_b);
/// Embeds a column-stochastic matrix p(y|x) with Kraus ops sqrt(p(y|x))|y><x|.
QuantumChannel classical_channel(const RealMatrix& stochastic);
/// Oracle-outcome channel for unstructured search: input index i in [1..n],
/// output bit [i == marked]; `marked` is 1-based.
QuantumChannel search_channel(int n, int marked);

//=========================================================================
// Classical Bayes reversal
//=========================================================================

struct BayesReversal {
  RealMatrix reversal;              // p(x|y), column-stochastic in y
  std::vector<int> excluded_outputs; // outputs y with p_Y(y) = 0
};

/// Classical reversal channel p(x|y) = p_X(x) p(y|x) / p_Y(y). Outputs with
/// zero mass are excluded and recorded.
BayesReversal classical_bayes_reversal(const RealVector& p_x,
                                       const RealMatrix& p_y_given_x);

//=========================================================================
// Choi matrix and channel distance
//=========================================================================

/// (id ⊗ channel) applied to the unnormalized maximally entangled operator.
ComplexMatrix choi_matrix(const QuantumChannel& c);
ComplexMatrix choi_matrix(const CPMap& c);

struct DiamondBounds {
  double lower = 0.0; // (1/d_in) * ||ΔChoi||_1
  double upper = 0.0; // ||ΔChoi||_1
};

/// Choi trace-norm sandwich on the diamond distance.
DiamondBounds diamond_distance_bounds(const QuantumChannel& c1,
                                      const QuantumChannel& c2);

} // namespace petzsim

#endif // PETZSIM_CHANNEL_HPP
