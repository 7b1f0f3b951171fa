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

#include "petzsim/petz.hpp"

#include <cmath>

#include "petzsim/registers.hpp"

namespace petzsim {

namespace {

double inv_sqrt_fn(double x) { return 1.0 / std::sqrt(x); }
double sqrt_fn(double x) { return std::sqrt(x); }

bool is_full_rank_psd(const ComplexMatrix& m) {
  SpectralDecomposition sd = eig_hermitian(0.5 * (m + m.adjoint().eval()));
  const double cutoff = 1e-12 * std::max(1.0, std::abs(sd.eigenvalues(0)));
  return sd.eigenvalues.minCoeff() > cutoff;
}

} // namespace

//=========================================================================
// Exact recovery channel
//=========================================================================

QuantumChannel exact_petz(const QuantumChannel& channel,
                          const DensityMatrix& sigma) {
  if (channel.dim_in() != sigma.dim())
    throw std::invalid_argument("exact_petz: sigma dimension mismatch");
  const ComplexMatrix nsig = apply(channel, sigma.matrix());
  const ComplexMatrix ns_inv_sqrt = matrix_function_psd(nsig, inv_sqrt_fn);
  const ComplexMatrix s_sqrt = matrix_function_psd(sigma.matrix(), sqrt_fn);

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(channel.kraus_count());
  for (const auto& k : channel.kraus())
    kraus.push_back(s_sqrt * k.adjoint() * ns_inv_sqrt);

  // Trace preserving on supp N(sigma) only; a rank-deficient N(sigma)
  // yields a trace-nonincreasing channel off support.
  double tol = 1e-9;
  if (!is_full_rank_psd(nsig)) {
    ComplexMatrix s = ComplexMatrix::Zero(channel.dim_out(), channel.dim_out());
    for (const auto& k : kraus) s += k.adjoint() * k;
    tol = (s - ComplexMatrix::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff() +
          1e-9;
  }
  return QuantumChannel(channel.dim_out(), channel.dim_in(), std::move(kraus),
                        tol);
}

//=========================================================================
// Instance construction
//=========================================================================

PetzInstance make_petz_instance(QuantumChannel channel, DensityMatrix sigma,
                                double eps, SqrtMode mode,
                                double kappa_sigma_override,
                                double kappa_nsigma_override,
                                int d_env_override) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("make_petz_instance: eps outside (0,1)");
  if (channel.dim_in() != sigma.dim())
    throw std::invalid_argument("make_petz_instance: sigma dimension mismatch");

  const ComplexMatrix nsig = apply(channel, sigma.matrix());
  const double ks_true = condition_bound(sigma.matrix());
  const double kn_true = condition_bound(nsig);

  PetzInstance inst{std::move(channel), std::move(sigma), eps, 0.0, 0.0, 0, mode};
  if (kappa_sigma_override > 0.0) {
    if (kappa_sigma_override < ks_true * (1.0 - 1e-9))
      throw std::invalid_argument(
          "make_petz_instance: kappa_sigma below the true bound " +
          std::to_string(ks_true));
    inst.kappa_sigma = kappa_sigma_override;
  } else {
    inst.kappa_sigma = ks_true * (1.0 + 1e-9);
  }
  if (kappa_nsigma_override > 0.0) {
    if (kappa_nsigma_override < kn_true * (1.0 - 1e-9))
      throw std::invalid_argument(
          "make_petz_instance: kappa_nsigma below the true bound " +
          std::to_string(kn_true));
    inst.kappa_nsigma = kappa_nsigma_override;
  } else {
    inst.kappa_nsigma = kn_true * (1.0 + 1e-9);
  }
  inst.d_env = isometric_extension(inst.channel, d_env_override).dim_env;
  return inst;
}

//=========================================================================
// Ideal isometric extension
//=========================================================================

ComplexMatrix ideal_isometric_extension(const PetzInstance& inst) {
  const IsometricExtension ext = isometric_extension(inst.channel, inst.d_env);
  const int d_a = inst.channel.dim_in();
  const int d_b = inst.channel.dim_out();
  const int d_e = ext.dim_env;

  const ComplexMatrix nsig = apply(inst.channel, inst.sigma.matrix());
  const ComplexMatrix ns_inv_sqrt = matrix_function_psd(nsig, inv_sqrt_fn);
  const ComplexMatrix s_sqrt = matrix_function_psd(inst.sigma.matrix(), sqrt_fn);

  // |Gamma>_{E Etilde} ⊗ N(sigma)^{-1/2}, registers [E, Etilde, B].
  ComplexMatrix gam = ComplexMatrix::Zero(d_e * d_e, 1);
  for (int i = 0; i < d_e; ++i) gam(i * d_e + i, 0) = 1.0;
  ComplexMatrix m = kron(gam, ns_inv_sqrt);

  std::vector<int> dims = {d_e, d_e, d_b};
  m = apply_op_left(m, ComplexMatrix(ext.dilation_unitary.adjoint()), {0, 2},
                    dims, {ext.dim_env_in, d_a});
  m = apply_op_left(m, s_sqrt, {2}, dims);
  // Project E' (most significant register) onto <0|.
  return m.topRows(d_e * d_a);
}

//=========================================================================
// W-tilde assembly
//=========================================================================

double error_budget(const PetzInstance& inst, double poly_err_inv_sqrt,
                    double poly_err_sqrt) {
  const double de_kappa = double(inst.d_env) * inst.kappa_nsigma;
  return poly_err_sqrt * std::sqrt(de_kappa) +
         2.0 * std::sqrt(double(inst.d_env)) * poly_err_inv_sqrt;
}

WTildeResult build_w_tilde(const PetzInstance& inst,
                           const ComplexMatrix& u_sigma,
                           const ComplexMatrix& u_nsigma) {
  const int d_a = inst.channel.dim_in();
  const int d_b = inst.channel.dim_out();
  const IsometricExtension ext = isometric_extension(inst.channel, inst.d_env);
  const int d_e = ext.dim_env;
  const int d_ep = ext.dim_env_in;
  const ComplexMatrix nsig = apply(inst.channel, inst.sigma.matrix());

  if (u_sigma.rows() % d_a != 0 || u_nsigma.rows() % d_b != 0)
    throw std::invalid_argument("build_w_tilde: purifier dimensions must be "
                                "multiples of the system dimensions");
  BlockEncoding be_sigma =
      from_purification(u_sigma, static_cast<int>(u_sigma.rows()) / d_a, d_a);
  if (!verify(be_sigma, inst.sigma.matrix(), 1e-8).pass)
    throw std::invalid_argument("build_w_tilde: purifier does not prepare sigma");
  BlockEncoding be_ns =
      from_purification(u_nsigma, static_cast<int>(u_nsigma.rows()) / d_b, d_b);
  if (!verify(be_ns, nsig, 1e-8).pass)
    throw std::invalid_argument(
        "build_w_tilde: purifier does not prepare N(sigma)");

  SVTResult f1 =
      inv_sqrt_encoding(be_ns, inst.kappa_nsigma, inst.eps, inst.d_env);
  SVTResult f2 = sqrt_encoding(be_sigma, inst.kappa_sigma, inst.eps,
                               inst.d_env, inst.kappa_nsigma, inst.sqrt_mode);

  ComplexVector gam = ComplexVector::Zero(d_e * d_e);
  for (int i = 0; i < d_e; ++i) gam(i * d_e + i) = 1.0;
  const ComplexMatrix u_phi =
      unitary_with_first_column(gam / std::sqrt(double(d_e)));

  // Registers [R'', E, Etilde, R', B].
  std::vector<int> dims = {2, d_e, d_e, 2, d_b};
  const long total = 4L * d_e * d_e * d_b;
  ComplexMatrix acc = ComplexMatrix::Identity(total, total);
  acc = apply_op_left(acc, u_phi, {1, 2}, dims);
  acc = apply_op_left(acc, f1.encoding.unitary, {3, 4}, dims);
  acc = apply_op_left(acc, ComplexMatrix(ext.dilation_unitary.adjoint()),
                      {1, 4}, dims, {d_ep, d_a});
  acc = apply_op_left(acc, f2.encoding.unitary, {0, 4}, dims);
  // Output registers are now [R'', E', Etilde, R', A]; bring the ancilla
  // (R'', E', R') in front of the system (Etilde, A).
  acc = permute_register_rows(acc, dims, {0, 1, 3, 2, 4});

  WTildeResult out;
  out.w.unitary = std::move(acc);
  out.w.alpha = 1.0;
  out.w.dim_anc_in = 4 * d_e * d_e;
  out.w.dim_sys_in = d_b;
  out.w.dim_anc_out = 4 * d_ep;
  out.w.dim_sys_out = d_e * d_a;
  out.w.query_cost = 1;

  const ComplexMatrix f1_mat = encoded_block(f1.encoding);
  const ComplexMatrix f2_mat = encoded_block(f2.encoding);
  out.v_tilde = ComplexMatrix::Zero(d_e * d_a, d_b);
  for (int i = 0; i < d_e; ++i)
    out.v_tilde.block(i * d_a, 0, d_a, d_b) =
        f2_mat * ext.isometry.block(i * d_b, 0, d_b, d_a).adjoint() * f1_mat;
  out.v_ideal = ideal_isometric_extension(inst);

  out.subnorm = 1.0 / (4.0 * std::sqrt(double(d_e) * inst.kappa_nsigma));
  const double structure_defect =
      spectral_norm(encoded_block(out.w) - out.subnorm * out.v_tilde);
  if (structure_defect > 1e-9)
    throw CertificationError("build_w_tilde",
                             "block structure defect " +
                                 std::to_string(structure_defect));

  out.isometry_defect = spectral_norm(out.v_tilde - out.v_ideal);
  out.error_budget =
      error_budget(inst, f1.certified_delta, f2.certified_delta);
  if (out.isometry_defect > out.error_budget)
    throw CertificationError(
        "build_w_tilde", "isometry defect " +
                             std::to_string(out.isometry_defect) +
                             " exceeds budget " +
                             std::to_string(out.error_budget));
  out.w.delta = out.subnorm * out.error_budget;
  out.deg_f1 = static_cast<int>(f1.modeled_queries / be_ns.query_cost);
  out.deg_f2 = static_cast<int>(f2.modeled_queries / be_sigma.query_cost);
  out.queries_u_nsigma = f1.modeled_queries;
  out.queries_u_sigma = f2.modeled_queries;
  return out;
}

//=========================================================================
// Oblivious amplitude amplification
//=========================================================================

namespace {

void reflect_rows(ComplexMatrix& m, int count) {
  m.topRows(count) *= -1.0;
}

} // namespace

AmplifyResult amplify(const BlockEncoding& w, double eps) {
  if (w.alpha != 1.0)
    throw std::invalid_argument("amplify: expects an alpha = 1 encoding");
  if (w.dim_sys_out < w.dim_sys_in)
    throw std::invalid_argument("amplify: output system smaller than input");
  const int sys_in = w.dim_sys_in, sys_out = w.dim_sys_out;

  const ComplexMatrix raw = w.unitary.topLeftCorner(sys_out, sys_in);
  Eigen::JacobiSVD<ComplexMatrix> svd(raw,
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector s = svd.singularValues();
  const double s_max = s(0), s_min = s(s.size() - 1);
  if (s_min <= 0.0 || (s_max - s_min) > 0.15 * s_max)
    throw CertificationError(
        "amplify", "block is not close to a scaled isometry (singular values "
                   "spread from " +
                       std::to_string(s_min) + " to " + std::to_string(s_max) +
                       ")");
  const ComplexMatrix polar_iso = svd.matrixU() * svd.matrixV().adjoint();

  AmplifyResult out;
  out.gamma_measured = std::min(1.0, 0.5 * (s_max + s_min));

  if (out.gamma_measured >= 1.0 - 1e-12) {
    out.encoding = w;
    out.n_rep = 1;
    out.rounds = 0;
    out.final_defect = spectral_norm(raw - polar_iso);
    out.encoding.delta = out.final_defect;
    return out;
  }

  const double theta = std::asin(out.gamma_measured);
  int k = std::max(0L, std::lround(std::floor((M_PI / (2.0 * theta) - 1.0) / 2.0)));
  const double residual = 1.0 - std::sin((2 * k + 1) * theta);
  double scale = 1.0;
  if (residual > std::max(1e-12, eps * eps / 16.0)) {
    // One extra round, with the block diluted so that the final rotation
    // angle lands exactly on pi/2.
    ++k;
    scale = std::sin(M_PI / (2.0 * (2 * k + 1))) / out.gamma_measured;
  }
  out.rounds = k;
  out.n_rep = 2 * k + 1;
  out.dilution_scale = scale;

  ComplexMatrix w_ext;
  int anc_in = w.dim_anc_in, anc_out = w.dim_anc_out;
  if (scale < 1.0) {
    ComplexMatrix rot(2, 2);
    const double phi = std::acos(std::min(1.0, scale));
    rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    w_ext = kron(rot, w.unitary);
    anc_in *= 2;
    anc_out *= 2;
  } else {
    w_ext = w.unitary;
  }

  // The Grover-type iterate G = -W (I-2P_in) W^† (I-2P_out) rotates each
  // singular pair by 2θ; the leading minus keeps the final block at
  // +sin((2k+1)θ) V instead of alternating sign with the round parity.
  // Everything happens inside S = range(W P_in) + range(P_out), so the
  // k-th power is taken in that subspace.
  const Eigen::Index dim_total = w_ext.rows();
  ComplexMatrix q(dim_total, sys_out + sys_in);
  q.setZero();
  for (int r = 0; r < sys_out; ++r) q(r, r) = 1.0;
  int n_extra = 0;
  for (int b = 0; b < sys_in; ++b) {
    ComplexVector v = w_ext.col(b);
    v.head(sys_out).setZero();
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < n_extra; ++j) {
        const ComplexVector qj = q.col(sys_out + j);
        v -= (qj.adjoint() * v)(0, 0) * qj;
      }
    if (v.norm() > 1e-10) q.col(sys_out + n_extra++) = v / v.norm();
  }
  const int dim_s = sys_out + n_extra;
  q.conservativeResize(Eigen::NoChange, dim_s);

  ComplexMatrix gq = q;
  reflect_rows(gq, sys_out);               // (I - 2 P_out)
  gq = w_ext.adjoint() * gq;
  reflect_rows(gq, sys_in);                // (I - 2 P_in)
  gq = -(w_ext * gq);
  const ComplexMatrix g_s = q.adjoint() * gq;

  ComplexMatrix g_pow = ComplexMatrix::Identity(dim_s, dim_s);
  for (int i = 0; i < k; ++i) g_pow = g_s * g_pow;

  const ComplexMatrix qt_w = q.adjoint() * w_ext;
  ComplexMatrix amplified =
      w_ext + q * ((g_pow - ComplexMatrix::Identity(dim_s, dim_s)) * qt_w);

  out.encoding.unitary = std::move(amplified);
  out.encoding.alpha = 1.0;
  out.encoding.dim_anc_in = anc_in;
  out.encoding.dim_sys_in = sys_in;
  out.encoding.dim_anc_out = anc_out;
  out.encoding.dim_sys_out = sys_out;
  out.encoding.query_cost = out.n_rep * w.query_cost;
  out.final_defect =
      spectral_norm(out.encoding.unitary.topLeftCorner(sys_out, sys_in) -
                    polar_iso);
  out.encoding.delta =
      out.final_defect + 2.0 * w.delta / out.gamma_measured;
  return out;
}

//=========================================================================
// Full pipeline
//=========================================================================

ComplexMatrix canonical_purifier(const DensityMatrix& rho) {
  const int d = rho.dim();
  SpectralDecomposition sd = eig_hermitian(rho.matrix());
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (int r = 0; r < d; ++r) {
    const double lam = std::max(0.0, sd.eigenvalues(r));
    psi.segment(r * d, d) = std::sqrt(lam) * sd.eigenvectors.col(r);
  }
  return unitary_with_first_column(psi / psi.norm());
}

PetzResult run_pipeline(const PetzInstance& inst, const ComplexMatrix& u_sigma,
                        const ComplexMatrix& u_nsigma) {
  const int d_a = inst.channel.dim_in();
  const int d_b = inst.channel.dim_out();

  WTildeResult wt = build_w_tilde(inst, u_sigma, u_nsigma);

  const ComplexMatrix nsig = apply(inst.channel, inst.sigma.matrix());
  const ComplexMatrix supp =
      matrix_function_psd(nsig, [](double) { return 1.0; });
  const double rank = supp.trace().real();
  const ComplexMatrix omega_bar = supp / rank;
  const ComplexMatrix block = encoded_block(wt.w);
  const double p_success =
      (block.adjoint() * block * omega_bar).trace().real();

  AmplifyResult amp = amplify(wt.w, inst.eps);

  const ComplexMatrix m = encoded_block(amp.encoding);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(inst.d_env);
  for (int i = 0; i < inst.d_env; ++i)
    kraus.push_back(m.block(i * d_a, 0, d_a, d_b));
  ComplexMatrix closure = ComplexMatrix::Zero(d_b, d_b);
  for (const auto& k : kraus) closure += k.adjoint() * k;
  const double tp_defect =
      (closure - ComplexMatrix::Identity(d_b, d_b)).cwiseAbs().maxCoeff();

  PetzResult result{
      QuantumChannel(d_b, d_a, std::move(kraus), tp_defect + 1e-12), {}};

  const QuantumChannel exact = exact_petz(inst.channel, inst.sigma);
  const DiamondBounds db =
      diamond_distance_bounds(result.recovered_channel, exact);

  PipelineDiagnostics& diag = result.diagnostics;
  diag.p_success_measured = p_success;
  diag.n_rep = amp.n_rep;
  diag.w_tilde_subnorm = wt.subnorm;
  diag.isometry_defect = wt.isometry_defect;
  diag.deg_f1 = wt.deg_f1;
  diag.deg_f2 = wt.deg_f2;
  diag.modeled_queries.u_sigma = amp.n_rep * wt.queries_u_sigma;
  diag.modeled_queries.u_nsigma = amp.n_rep * wt.queries_u_nsigma;
  diag.modeled_queries.u_channel = amp.n_rep;
  diag.error_budget = wt.error_budget;
  diag.amplified_defect = spectral_norm(m - wt.v_ideal);
  diag.choi_lower = db.lower;
  diag.choi_upper = db.upper;
  diag.tp_defect = tp_defect;
  diag.support_leak = rank < d_b - 0.5;

  if (db.upper > kChoiBoundFactor * inst.eps)
    throw CertificationError(
        "run_pipeline end-to-end",
        "Choi upper bound " + std::to_string(db.upper) + " exceeds " +
            std::to_string(kChoiBoundFactor) + " * eps = " +
            std::to_string(kChoiBoundFactor * inst.eps));
  return result;
}

PetzResult run_pipeline(const PetzInstance& inst) {
  const ComplexMatrix u_sigma = canonical_purifier(inst.sigma);
  const ComplexMatrix u_nsigma =
      canonical_purifier(DensityMatrix(apply(inst.channel, inst.sigma.matrix())));
  return run_pipeline(inst, u_sigma, u_nsigma);
}

//=========================================================================
// Search demonstration
//=========================================================================

SearchDemoReport search_demo(int n, int marked, double eps) {
  SearchDemoReport rep;
  rep.n = n;
  rep.marked = marked;
  rep.eps = eps;
  rep.sqrt_n = std::sqrt(double(n));

  const QuantumChannel oracle = search_channel(n, marked);
  const DensityMatrix sigma = DensityMatrix::maximally_mixed(n);
  ComplexMatrix omega = ComplexMatrix::Zero(2, 2);
  omega(1, 1) = 1.0; // the "marked" oracle outcome

  const QuantumChannel exact = exact_petz(oracle, sigma);
  rep.exact_success = apply(exact, omega)(marked - 1, marked - 1).real();

  const PetzInstance inst = make_petz_instance(oracle, sigma, eps);
  const PetzResult pr = run_pipeline(inst);
  rep.approx_success =
      apply(pr.recovered_channel, omega)(marked - 1, marked - 1).real();
  rep.oracle_uses = pr.diagnostics.modeled_queries.u_channel;
  return rep;
}

} // namespace petzsim
