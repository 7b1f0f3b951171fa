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

#ifndef PETZSIM_PETZ_HPP
#define PETZSIM_PETZ_HPP

#include "petzsim/block_encoding.hpp"
#include "petzsim/channel.hpp"
#include "petzsim/svt.hpp"

namespace petzsim {

//=========================================================================
// Exact recovery channel
//=========================================================================

/// The Petz recovery channel of (channel, sigma):
///   omega -> sigma^{1/2} N^†( N(sigma)^{-1/2} omega N(sigma)^{-1/2} ) sigma^{1/2}
/// with pseudo-inverses on the support of N(sigma). Trace preserving on that
/// support; inputs outside it lose trace (kept, flagged by tp_defect).
QuantumChannel exact_petz(const QuantumChannel& channel,
                          const DensityMatrix& sigma);

//=========================================================================
// Pipeline instance and diagnostics
//=========================================================================

struct PetzInstance {
  QuantumChannel channel;
  DensityMatrix sigma;
  double eps = 0.1;
  double kappa_sigma = 1.0;   // upper bound on 1/min nonzero eigenvalue of sigma
  double kappa_nsigma = 1.0;  // same for N(sigma)
  int d_env = 1;
  SqrtMode sqrt_mode = SqrtMode::kExactSupport;
};

/// Builds an instance, computing d_env (padded Kraus count) and condition
/// bounds from the spectra unless overrides are given. Overrides below the
/// true bounds are rejected.
PetzInstance make_petz_instance(QuantumChannel channel, DensityMatrix sigma,
                                double eps,
                                SqrtMode mode = SqrtMode::kExactSupport,
                                double kappa_sigma_override = 0.0,
                                double kappa_nsigma_override = 0.0,
                                int d_env_override = 0);

struct QueryCounts {
  long u_sigma = 0;   // modeled uses of the sigma purifier
  long u_nsigma = 0;  // modeled uses of the N(sigma) purifier
  long u_channel = 0; // modeled uses of the channel dilation
};

struct PipelineDiagnostics {
  double p_success_measured = 0.0; // pre-amplification all-zeros probability
  int n_rep = 0;                   // uses of the assembled unitary after OAA
  double w_tilde_subnorm = 0.0;    // expected 1/(4 sqrt(d_E kappa))
  double isometry_defect = 0.0;    // ||V~ - V||
  int deg_f1 = 0, deg_f2 = 0;
  QueryCounts modeled_queries;
  double error_budget = 0.0;       // triangle-inequality bound on ||V~ - V||
  double amplified_defect = 0.0;   // ||post-OAA block - V||
  double choi_lower = 0.0, choi_upper = 0.0;
  double tp_defect = 0.0;
  bool support_leak = false;       // N(sigma) rank deficient
};

struct PetzResult {
  QuantumChannel recovered_channel; // B -> A, trace preserving up to O(eps)
  PipelineDiagnostics diagnostics;
};

/// End-to-end constant: the pipeline certifies a Choi trace-norm upper
/// bound of at most kChoiBoundFactor * eps against the exact Petz channel.
inline constexpr double kChoiBoundFactor = 8.0;

//=========================================================================
// Pipeline stages
//=========================================================================

/// Isometric extension V of the Petz channel, mapping B into Ẽ⊗A, built from
/// the channel dilation, the unnormalized maximally entangled vector and the
/// exact matrix functions. Tracing Ẽ reproduces exact_petz.
ComplexMatrix ideal_isometric_extension(const PetzInstance& inst);

struct WTildeResult {
  BlockEncoding w;           // rectangular encoding, block = gamma * V~
  double subnorm = 0.0;      // gamma = 1/(4 sqrt(d_E kappa))
  ComplexMatrix v_tilde;     // approximate isometric extension
  ComplexMatrix v_ideal;
  double isometry_defect = 0.0;
  double error_budget = 0.0;
  int deg_f1 = 0, deg_f2 = 0;
  long queries_u_sigma = 0;  // per use of w
  long queries_u_nsigma = 0;
};

/// Assembles the recovery unitary from the two transformed encodings, the
/// entangled-pair preparer and the adjoint channel dilation. The supplied
/// purifiers must prepare sigma and N(sigma); they are audited first.
WTildeResult build_w_tilde(const PetzInstance& inst,
                           const ComplexMatrix& u_sigma,
                           const ComplexMatrix& u_nsigma);

/// Triangle-inequality error budget: pe2 * sqrt(d_E kappa) + 2 sqrt(d_E) * pe1,
/// where pe1 and pe2 bound the inverse-square-root and square-root
/// polynomial matrix errors.
double error_budget(const PetzInstance& inst, double poly_err_inv_sqrt,
                    double poly_err_sqrt);

struct AmplifyResult {
  BlockEncoding encoding; // (1, O(eps))-encoding of the isometry
  int n_rep = 0;          // total uses of the input unitary (2k+1)
  int rounds = 0;
  double gamma_measured = 0.0;
  double dilution_scale = 1.0; // < 1 when the block was rescaled to hit pi/2
  double final_defect = 0.0;   // distance of the final block to the polar isometry
};

/// Oblivious amplitude amplification: reflection rounds about the all-zeros
/// ancilla subspaces, with round count from the measured block subnorm. If
/// the largest angle satisfying (2k+1) arcsin(gamma) <= pi/2 leaves a
/// residual above eps^2/16, one extra round is taken and the block is
/// diluted so the final rotation lands exactly on pi/2.
AmplifyResult amplify(const BlockEncoding& w, double eps);

/// Full pipeline: assemble, measure, amplify, read out the recovered channel
/// and certify the Choi bound against exact_petz.
PetzResult run_pipeline(const PetzInstance& inst, const ComplexMatrix& u_sigma,
                        const ComplexMatrix& u_nsigma);

/// Convenience overload using deterministic canonical purifiers.
PetzResult run_pipeline(const PetzInstance& inst);

/// Deterministic purification circuit of a density matrix on R⊗A with R ≅ A;
/// the first column is the canonical eigen-purification.
ComplexMatrix canonical_purifier(const DensityMatrix& rho);

//=========================================================================
// Search demonstration
//=========================================================================

struct SearchDemoReport {
  int n = 0;
  int marked = 0; // 1-based
  double eps = 0.0;
  double exact_success = 0.0;  // exact recovery applied to the "found" outcome
  double approx_success = 0.0; // same through the approximate pipeline
  long oracle_uses = 0;        // modeled uses of the channel dilation
  double sqrt_n = 0.0;
};

SearchDemoReport search_demo(int n, int marked, double eps);

} // namespace petzsim

#endif // PETZSIM_PETZ_HPP
