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

#include "petzsim/pgm.hpp"

#include <cmath>

namespace petzsim {

Ensemble::Ensemble(std::vector<std::string> labels, RealVector probs,
                   std::vector<DensityMatrix> states)
    : labels_(std::move(labels)), probs_(std::move(probs)),
      states_(std::move(states)) {
  if (states_.empty())
    throw std::invalid_argument("Ensemble: needs at least one state");
  if (labels_.size() != states_.size() ||
      probs_.size() != static_cast<Eigen::Index>(states_.size()))
    throw std::invalid_argument("Ensemble: labels/probs/states size mismatch");
  if (probs_.minCoeff() < 0.0 || std::abs(probs_.sum() - 1.0) > 1e-12)
    throw std::invalid_argument("Ensemble: probabilities must sum to 1");
  for (const auto& s : states_)
    if (s.dim() != states_[0].dim())
      throw std::invalid_argument("Ensemble: states have mixed dimensions");
}

ComplexMatrix Ensemble::sigma_bar() const {
  ComplexMatrix out = ComplexMatrix::Zero(dim_b(), dim_b());
  for (int x = 0; x < size(); ++x) out += probs_(x) * states_[x].matrix();
  return out;
}

ComplexMatrix Ensemble::cq_state() const {
  const int db = dim_b();
  ComplexMatrix out = ComplexMatrix::Zero(size() * db, size() * db);
  for (int x = 0; x < size(); ++x)
    out.block(x * db, x * db, db, db) = probs_(x) * states_[x].matrix();
  return out;
}

POVM pgm_povm(const Ensemble& e) {
  const ComplexMatrix sbar = e.sigma_bar();
  if (spectral_norm(sbar) < 1e-14)
    throw std::invalid_argument("pgm_povm: degenerate ensemble");
  const ComplexMatrix s_inv =
      matrix_function_psd(sbar, [](double x) { return 1.0 / std::sqrt(x); });
  POVM out;
  for (int x = 0; x < e.size(); ++x)
    out.elements.push_back(s_inv * (e.probs()(x) * e.states()[x].matrix()) *
                           s_inv);
  return out;
}

QuantumChannel pretty_good_instrument(const Ensemble& e) {
  const int db = e.dim_b();
  const ComplexMatrix sbar = e.sigma_bar();
  const ComplexMatrix s_inv =
      matrix_function_psd(sbar, [](double x) { return 1.0 / std::sqrt(x); });
  std::vector<ComplexMatrix> kraus;
  for (int x = 0; x < e.size(); ++x) {
    const ComplexMatrix sx_sqrt =
        matrix_function_psd(e.states()[x].matrix(), [](double v) { return std::sqrt(v); });
    ComplexMatrix k = ComplexMatrix::Zero(e.size() * db, db);
    k.block(x * db, 0, db, db) = std::sqrt(e.probs()(x)) * sx_sqrt * s_inv;
    kraus.push_back(std::move(k));
  }
  ComplexMatrix closure = ComplexMatrix::Zero(db, db);
  for (const auto& k : kraus) closure += k.adjoint() * k;
  const double defect =
      (closure - ComplexMatrix::Identity(db, db)).cwiseAbs().maxCoeff();
  // Trace preserving on supp sigma_bar only.
  return QuantumChannel(db, e.size() * db, std::move(kraus),
                        std::max(1e-9, defect + 1e-12));
}

double pgm_success_probability(const Ensemble& e) {
  const POVM povm = pgm_povm(e);
  double p = 0.0;
  for (int x = 0; x < e.size(); ++x)
    p += e.probs()(x) *
         (povm.elements[x] * e.states()[x].matrix()).trace().real();
  return p;
}

PgmParameters pgm_parameters(const Ensemble& e) {
  PgmParameters out;
  out.d_env = e.size();
  out.kappa_nsigma = condition_bound(e.sigma_bar());
  out.kappa_sigma_definition = condition_bound(e.cq_state());
  double displayed = std::numeric_limits<double>::infinity();
  for (int x = 0; x < e.size(); ++x) {
    if (e.probs()(x) <= 0.0) continue;
    displayed = std::min(displayed,
                         e.probs()(x) * condition_bound(e.states()[x].matrix()));
  }
  out.kappa_sigma_displayed = displayed;
  return out;
}

ComplexMatrix ensemble_purifier(const Ensemble& e) {
  const int dx = e.size(), db = e.dim_b();
  const int d = dx * db;
  // Registers (X', B', X, B); reference R = X'⊗B' purifies the cq state.
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (int x = 0; x < dx; ++x) {
    if (e.probs()(x) <= 0.0) continue;
    SpectralDecomposition sd = eig_hermitian(e.states()[x].matrix());
    for (int k = 0; k < db; ++k) {
      const double lam = std::max(0.0, sd.eigenvalues(k));
      if (lam <= 0.0) continue;
      const double w = std::sqrt(e.probs()(x) * lam);
      for (int b = 0; b < db; ++b) {
        const long idx = ((static_cast<long>(x) * db + k) * dx + x) * db + b;
        psi(idx) = w * sd.eigenvectors(b, k);
      }
    }
  }
  return unitary_with_first_column(psi / psi.norm());
}

PetzResult pgm_via_petz(const Ensemble& e, double eps) {
  const int dx = e.size(), db = e.dim_b();
  const QuantumChannel discard = partial_trace_channel(dx, db);
  const DensityMatrix cq(e.cq_state());
  const PetzInstance inst = make_petz_instance(discard, cq, eps);
  const ComplexMatrix u_sigma = ensemble_purifier(e);
  const ComplexMatrix u_nsigma =
      canonical_purifier(DensityMatrix(e.sigma_bar()));
  return run_pipeline(inst, u_sigma, u_nsigma);
}

double helstrom_success(const DensityMatrix& rho0, const DensityMatrix& rho1,
                        double q0, double q1) {
  return 0.5 * (1.0 + trace_norm(q0 * rho0.matrix() - q1 * rho1.matrix()));
}

} // namespace petzsim
