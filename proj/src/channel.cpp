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

#include "petzsim/channel.hpp"

#include <cmath>

#include "petzsim/registers.hpp"

namespace petzsim {

QuantumChannel::QuantumChannel(int dim_in, int dim_out,
                               std::vector<ComplexMatrix> kraus,
                               double tp_tolerance)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
  if (kraus_.empty())
    throw std::invalid_argument("QuantumChannel: needs at least one Kraus operator");
  for (const auto& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_)
      throw std::invalid_argument("QuantumChannel: Kraus operator shape mismatch");
    if (!k.allFinite())
      throw std::invalid_argument("QuantumChannel: non-finite Kraus entry");
  }
  const double defect = tp_defect();
  if (defect > tp_tolerance)
    throw std::invalid_argument(
        "QuantumChannel: not trace preserving, closure defect " +
        std::to_string(defect));
}

double QuantumChannel::tp_defect() const {
  ComplexMatrix s = ComplexMatrix::Zero(dim_in_, dim_in_);
  for (const auto& k : kraus_) s += k.adjoint() * k;
  return (s - ComplexMatrix::Identity(dim_in_, dim_in_)).cwiseAbs().maxCoeff();
}

namespace {

ComplexMatrix kraus_apply(const std::vector<ComplexMatrix>& kraus, int dim_in,
                          const ComplexMatrix& rho) {
  if (rho.rows() != dim_in || rho.cols() != dim_in)
    throw std::invalid_argument("apply: state dimension mismatch");
  ComplexMatrix out =
      ComplexMatrix::Zero(kraus[0].rows(), kraus[0].rows());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

} // namespace

ComplexMatrix apply(const QuantumChannel& c, const ComplexMatrix& rho) {
  return kraus_apply(c.kraus(), c.dim_in(), rho);
}

ComplexMatrix apply(const CPMap& c, const ComplexMatrix& rho) {
  return kraus_apply(c.kraus, c.dim_in, rho);
}

ComplexMatrix adjoint_apply(const QuantumChannel& c, const ComplexMatrix& omega) {
  if (omega.rows() != c.dim_out() || omega.cols() != c.dim_out())
    throw std::invalid_argument("adjoint_apply: operator dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(c.dim_in(), c.dim_in());
  for (const auto& k : c.kraus()) out += k.adjoint() * omega * k;
  return out;
}

//=========================================================================
// Isometric extension
//=========================================================================

IsometricExtension isometric_extension(const QuantumChannel& c, int d_env) {
  const int d_a = c.dim_in(), d_b = c.dim_out();
  int d_e = d_env == 0 ? c.kraus_count() : d_env;
  if (d_e < c.kraus_count())
    throw std::invalid_argument("isometric_extension: d_env below Kraus count");
  // The dilation unitary on E'⊗A -> E⊗B is square only when d_A divides
  // d_E*d_B; pad the environment with zero Kraus operators if needed.
  while ((d_e * d_b) % d_a != 0) ++d_e;

  ComplexMatrix v = ComplexMatrix::Zero(d_e * d_b, d_a);
  for (int i = 0; i < c.kraus_count(); ++i)
    v.block(i * d_b, 0, d_b, d_a) = c.kraus()[i];

  IsometricExtension ext;
  ext.dim_env = d_e;
  ext.dim_env_in = d_e * d_b / d_a;
  ext.isometry = v;
  ext.dilation_unitary = complete_isometry(v);
  return ext;
}

ComplexMatrix adjoint_apply_via_dilation(const IsometricExtension& ext,
                                         int dim_in, int dim_out,
                                         const ComplexMatrix& omega) {
  if (omega.rows() != dim_out || omega.cols() != dim_out)
    throw std::invalid_argument("adjoint_apply_via_dilation: dimension mismatch");
  const int d_e = ext.dim_env;
  // Unnormalized maximally entangled operator on E⊗Ẽ.
  ComplexVector gamma = ComplexVector::Zero(d_e * d_e);
  for (int i = 0; i < d_e; ++i) gamma(i * d_e + i) = 1.0;
  ComplexMatrix gamma_op = gamma * gamma.adjoint();

  // (Γ_{EẼ} ⊗ ω_B) on registers [E, Ẽ, B], then sandwich with I_Ẽ ⊗ V
  // bringing (E,B) together, finally trace out Ẽ.
  std::vector<int> dims = {d_e, d_e, dim_out};
  ComplexMatrix big = kron(gamma_op, omega);
  // right side: (Γ⊗ω) · embed(V on {E,B})
  std::vector<int> dims_v = {d_e, d_e, dim_out};
  // V maps A -> E⊗B; embedded with Ẽ untouched it maps Ẽ⊗A -> E⊗Ẽ⊗B.
  ComplexMatrix v_emb = embed_operator(ext.isometry, {0, 2}, {1, d_e, dim_in},
                                       {d_e, dim_out});
  ComplexMatrix sand = v_emb.adjoint() * big * v_emb; // on Ẽ⊗A
  return partial_trace_first(sand, d_e, dim_in);
}

//=========================================================================
// Named constructors
//=========================================================================

QuantumChannel unitary_channel(const ComplexMatrix& u) {
  if (u.rows() != u.cols())
    throw std::invalid_argument("unitary_channel: matrix not square");
  const int d = static_cast<int>(u.rows());
  if ((u * u.adjoint() - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("unitary_channel: matrix not unitary");
  return QuantumChannel(d, d, {u});
}

QuantumChannel depolarizing(int dim, double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("depolarizing: p outside [0,1]");
  // Heisenberg-Weyl twirl: K_{ab} = c_{ab} X^a Z^b with weights chosen so the
  // map is (1-p)·rho + p·I/d.
  ComplexMatrix x = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
  const Complex omega = std::exp(Complex(0.0, 2.0 * M_PI / dim));
  for (int i = 0; i < dim; ++i) {
    x((i + 1) % dim, i) = 1.0;
    z(i, i) = std::pow(omega, i);
  }
  std::vector<ComplexMatrix> kraus;
  ComplexMatrix xa = ComplexMatrix::Identity(dim, dim);
  for (int a = 0; a < dim; ++a) {
    ComplexMatrix op = xa;
    for (int b = 0; b < dim; ++b) {
      const double w = (a == 0 && b == 0)
                           ? std::sqrt(1.0 - p + p / (dim * double(dim)))
                           : std::sqrt(p) / dim;
      kraus.push_back(w * op);
      op = op * z;
    }
    xa = xa * x;
  }
  return QuantumChannel(dim, dim, std::move(kraus));
}

QuantumChannel amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("amplitude_damping: gamma outside [0,1]");
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  return QuantumChannel(2, 2, {k0, k1});
}

QuantumChannel dephasing(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("dephasing: p outside [0,1]");
  ComplexMatrix z = ComplexMatrix::Identity(2, 2);
  z(1, 1) = -1.0;
  return QuantumChannel(
      2, 2,
      {std::sqrt(1.0 - p) * ComplexMatrix::Identity(2, 2), std::sqrt(p) * z});
}

QuantumChannel partial_trace_channel(int d_x, int d_b) {
  std::vector<ComplexMatrix> kraus;
  for (int x = 0; x < d_x; ++x) {
    ComplexMatrix k = ComplexMatrix::Zero(d_b, d_x * d_b);
    k.block(0, x * d_b, d_b, d_b) = ComplexMatrix::Identity(d_b, d_b);
    kraus.push_back(k);
  }
  return QuantumChannel(d_x * d_b, d_b, std::move(kraus));
}

QuantumChannel classical_channel(const RealMatrix& stochastic) {
  const int d_y = static_cast<int>(stochastic.rows());
  const int d_x = static_cast<int>(stochastic.cols());
  for (int x = 0; x < d_x; ++x) {
    if (stochastic.col(x).minCoeff() < -1e-12 ||
        std::abs(stochastic.col(x).sum() - 1.0) > 1e-9)
      throw std::invalid_argument("classical_channel: columns must be distributions");
  }
  std::vector<ComplexMatrix> kraus;
  for (int x = 0; x < d_x; ++x)
    for (int y = 0; y < d_y; ++y) {
      if (stochastic(y, x) <= 0.0) continue;
      ComplexMatrix k = ComplexMatrix::Zero(d_y, d_x);
      k(y, x) = std::sqrt(stochastic(y, x));
      kraus.push_back(k);
    }
  return QuantumChannel(d_x, d_y, std::move(kraus));
}

QuantumChannel search_channel(int n, int marked) {
  if (n < 2) throw std::invalid_argument("search_channel: need n >= 2");
  if (marked < 1 || marked > n)
    throw std::invalid_argument("search_channel: marked index outside 1..n");
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < n; ++i) {
    ComplexMatrix k = ComplexMatrix::Zero(2, n);
    k(i == marked - 1 ? 1 : 0, i) = 1.0;
    kraus.push_back(k);
  }
  return QuantumChannel(n, 2, std::move(kraus));
}

//=========================================================================
// Classical Bayes reversal
//=========================================================================

BayesReversal classical_bayes_reversal(const RealVector& p_x,
                                       const RealMatrix& p_y_given_x) {
  const int nx = static_cast<int>(p_x.size());
  const int ny = static_cast<int>(p_y_given_x.rows());
  if (p_y_given_x.cols() != nx)
    throw std::invalid_argument("classical_bayes_reversal: shape mismatch");
  if (p_x.minCoeff() < -1e-12 || std::abs(p_x.sum() - 1.0) > 1e-9)
    throw std::invalid_argument("classical_bayes_reversal: p_x not a distribution");
  for (int x = 0; x < nx; ++x)
    if (std::abs(p_y_given_x.col(x).sum() - 1.0) > 1e-9)
      throw std::invalid_argument(
          "classical_bayes_reversal: channel columns must be distributions");

  RealVector p_y = p_y_given_x * p_x;
  BayesReversal out;
  out.reversal = RealMatrix::Zero(nx, ny);
  for (int y = 0; y < ny; ++y) {
    if (p_y(y) <= 0.0) {
      out.excluded_outputs.push_back(y);
      continue;
    }
    for (int x = 0; x < nx; ++x)
      out.reversal(x, y) = p_x(x) * p_y_given_x(y, x) / p_y(y);
  }
  return out;
}

//=========================================================================
// Choi matrix and channel distance
//=========================================================================

namespace {

ComplexMatrix choi_from_kraus(const std::vector<ComplexMatrix>& kraus,
                              int dim_in, int dim_out) {
  ComplexMatrix j = ComplexMatrix::Zero(dim_in * dim_out, dim_in * dim_out);
  for (const auto& k : kraus) {
    // (I ⊗ K)|Γ> = Σ_i |i> ⊗ K|i>
    ComplexVector v = ComplexVector::Zero(dim_in * dim_out);
    for (int i = 0; i < dim_in; ++i)
      v.segment(i * dim_out, dim_out) = k.col(i);
    j += v * v.adjoint();
  }
  return j;
}

} // namespace

ComplexMatrix choi_matrix(const QuantumChannel& c) {
  return choi_from_kraus(c.kraus(), c.dim_in(), c.dim_out());
}

ComplexMatrix choi_matrix(const CPMap& c) {
  return choi_from_kraus(c.kraus, c.dim_in, c.dim_out);
}

DiamondBounds diamond_distance_bounds(const QuantumChannel& c1,
                                      const QuantumChannel& c2) {
  if (c1.dim_in() != c2.dim_in() || c1.dim_out() != c2.dim_out())
    throw std::invalid_argument("diamond_distance_bounds: dimension mismatch");
  const double tn = trace_norm(choi_matrix(c1) - choi_matrix(c2));
  return DiamondBounds{tn / c1.dim_in(), tn};
}

} // namespace petzsim
