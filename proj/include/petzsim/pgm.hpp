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

#ifndef PETZSIM_PGM_HPP
#define PETZSIM_PGM_HPP

#include <string>
#include <vector>

#include "petzsim/petz.hpp"

namespace petzsim {

/// Labeled ensemble of states with prior probabilities. The associated
/// classical-quantum state is kept block-diagonally (one block per label);
/// cq_state() gives the dense embedding used for cross-module identities.
class Ensemble {
public:
  Ensemble(std::vector<std::string> labels, RealVector probs,
           std::vector<DensityMatrix> states);

  int size() const { return static_cast<int>(states_.size()); }
  int dim_b() const { return states_[0].dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RealVector& probs() const { return probs_; }
  const std::vector<DensityMatrix>& states() const { return states_; }

  /// Average state sigma_bar = sum_x p_x sigma_x.
  ComplexMatrix sigma_bar() const;
  /// Dense classical-quantum state sum_x p_x |x><x| ⊗ sigma_x.
  ComplexMatrix cq_state() const;

private:
  std::vector<std::string> labels_;
  RealVector probs_;
  std::vector<DensityMatrix> states_;
};

struct POVM {
  std::vector<ComplexMatrix> elements;
};

/// Square-root measurement: E_x = sigma_bar^{-1/2} p_x sigma_x sigma_bar^{-1/2}
/// with pseudo-inverses on supp sigma_bar; sums to the support projector.
POVM pgm_povm(const Ensemble& e);

/// The measurement channel B -> X⊗B with Kraus operators
/// sqrt(p_x) |x> ⊗ sigma_x^{1/2} sigma_bar^{-1/2}: classically labeled
/// outcomes plus the post-measurement state. Equals the Petz recovery of the
/// partial-trace channel relative to the classical-quantum state.
QuantumChannel pretty_good_instrument(const Ensemble& e);

/// sum_x p_x Tr[E_x sigma_x].
double pgm_success_probability(const Ensemble& e);

struct PgmParameters {
  int d_env = 0;                    // |X|
  double kappa_nsigma = 0.0;        // condition bound of sigma_bar
  double kappa_sigma_definition = 0.0; // 1/min nonzero eigenvalue of the cq state
  double kappa_sigma_displayed = 0.0;  // min_x p_x * kappa(sigma_x)
};

/// Pipeline parameters of the instrument as a recovery-channel instance.
/// Two kappa_sigma readings are reported; the definition-consistent one
/// (from the classical-quantum state's spectrum) drives the pipeline.
PgmParameters pgm_parameters(const Ensemble& e);

/// Runs the recovery pipeline for the partial-trace channel relative to the
/// classical-quantum state, using the structured ensemble purifier.
PetzResult pgm_via_petz(const Ensemble& e, double eps);

/// Deterministic purifier of the classical-quantum state on R⊗(X⊗B) with
/// R = X'⊗B': |psi> = sum_x sqrt(p_x) |x>_{X'} |phi_x>_{B'B} |x>_X.
ComplexMatrix ensemble_purifier(const Ensemble& e);

/// Helstrom optimum for discriminating two states with priors (q0, q1):
/// (1 + ||q0 rho0 - q1 rho1||_1) / 2.
double helstrom_success(const DensityMatrix& rho0, const DensityMatrix& rho1,
                        double q0, double q1);

} // namespace petzsim

#endif // PETZSIM_PGM_HPP
