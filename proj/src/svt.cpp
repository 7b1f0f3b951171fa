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

#include "petzsim/svt.hpp"

#include <cmath>

namespace petzsim {

namespace {

// Eigenvalues must sit in [theta,1] or below the null cutoff; anything in
// the gap means the supplied condition bound was too optimistic.
void check_spectrum_support(const RealVector& evals, double theta,
                            double null_cutoff, const char* stage) {
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    const double lam = evals(i);
    if (lam > null_cutoff && lam < theta * (1.0 - 1e-9))
      throw CertificationError(
          stage, "eigenvalue " + std::to_string(lam) +
                     " lies below 1/kappa = " + std::to_string(theta) +
                     "; supplied condition bound is not an upper bound");
  }
}

} // namespace

SVTResult svt_apply(const BlockEncoding& be, const ChebyshevPoly& p,
                    double out_alpha) {
  if (!be.is_square())
    throw std::invalid_argument("svt_apply: requires a square encoding");
  if (p.cap > out_alpha)
    throw std::invalid_argument("svt_apply: polynomial cap " +
                                std::to_string(p.cap) + " exceeds out_alpha " +
                                std::to_string(out_alpha));
  ComplexMatrix a = encoded_block(be);
  const double hd = hermiticity_defect(a);
  if (hd > 1e-9)
    throw std::invalid_argument("svt_apply: encoded block not Hermitian");
  a = 0.5 * (a + a.adjoint().eval());
  {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
      throw std::invalid_argument(
          "svt_apply: encoded block not PSD, eigenvalue " +
          std::to_string(es.eigenvalues().minCoeff()));
  }
  // Null-space eigenvalues map to zero (matrix_function_psd convention): the
  // transform acts on the support, matching the pseudo-inverse targets.
  const ComplexMatrix f_of_a = matrix_function_psd(
      a, [&p](double x) { return p.eval(std::clamp(x, -1.0, 1.0)); });

  SVTResult out;
  out.encoding = dilate_contraction(f_of_a / out_alpha);
  out.encoding.alpha = out_alpha;
  out.modeled_queries = static_cast<long>(p.degree()) * be.query_cost;
  out.encoding.query_cost = out.modeled_queries;
  double lipschitz_term = 0.0;
  if (be.delta > 0.0) lipschitz_term = p.derivative_bound(0.0, 1.0) * be.delta;
  out.certified_delta = lipschitz_term + 1e-10;
  out.encoding.delta = out.certified_delta;
  return out;
}

SVTResult inv_sqrt_encoding(const BlockEncoding& be_nsigma, double kappa,
                            double eps, int d_env) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("inv_sqrt_encoding: eps outside (0,1)");
  if (kappa < 1.0)
    throw std::invalid_argument("inv_sqrt_encoding: kappa below 1");

  ComplexMatrix a = encoded_block(be_nsigma);
  a = 0.5 * (a + a.adjoint().eval());
  SpectralDecomposition sd = eig_hermitian(a);
  const double theta = std::min(1.0 / kappa, 0.5);
  const double null_cutoff = 1e-12 * std::max(1.0, sd.eigenvalues(0));
  check_spectrum_support(sd.eigenvalues, theta, null_cutoff,
                         "inv_sqrt_encoding");

  // Budget split: the polynomial takes eps/(4 sqrt(d_E)) of the allowed
  // eps/sqrt(d_E) block error, leaving headroom for the downstream chain.
  const double delta_poly =
      std::min(0.5, eps * std::sqrt(theta) / (8.0 * std::sqrt(double(d_env))));
  ChebyshevPoly p = approx_inv_sqrt(theta, delta_poly);

  // 2/sqrt(theta) equals the paper's 2 sqrt(kappa) once theta <= 1/2.
  const double out_alpha = 2.0 / std::sqrt(theta);
  SVTResult res = svt_apply(be_nsigma, p, out_alpha);
  res.certified_delta += p.sup_error_cert;
  res.encoding.delta = res.certified_delta;
  if (res.certified_delta > eps / std::sqrt(double(d_env)))
    throw CertificationError("inv_sqrt_encoding",
                             "certificate exceeds eps/sqrt(d_E)");
  return res;
}

SVTResult sqrt_encoding(const BlockEncoding& be_sigma, double kappa_sigma,
                        double eps, int d_env, double kappa_nsigma,
                        SqrtMode mode) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("sqrt_encoding: eps outside (0,1)");
  if (kappa_sigma < 1.0 || kappa_nsigma < 1.0)
    throw std::invalid_argument("sqrt_encoding: kappa below 1");

  const double scale = std::sqrt(double(d_env) * kappa_nsigma);
  double theta;
  if (mode == SqrtMode::kExactSupport) {
    theta = std::min(1.0 / kappa_sigma, 0.5);
    ComplexMatrix a = encoded_block(be_sigma);
    a = 0.5 * (a + a.adjoint().eval());
    SpectralDecomposition sd = eig_hermitian(a);
    const double null_cutoff = 1e-12 * std::max(1.0, sd.eigenvalues(0));
    check_spectrum_support(sd.eigenvalues, theta, null_cutoff, "sqrt_encoding");
  } else {
    theta = std::clamp(eps * eps / (double(d_env) * kappa_nsigma), 1e-8, 0.5);
  }

  const double delta_poly = std::min(0.5, eps / (4.0 * scale));
  ChebyshevPoly p = mode == SqrtMode::kExactSupport
                        ? approx_sqrt(theta, delta_poly)
                        : approx_sqrt_thresholded(theta, delta_poly);

  SVTResult res = svt_apply(be_sigma, p, 2.0);
  res.certified_delta += p.sup_error_cert;
  if (mode == SqrtMode::kThresholded) {
    // Below-threshold eigenvalues are clamped toward zero instead of being
    // tracked by the sup-error certificate; account for the plateau.
    res.certified_delta += 2.0 * std::sqrt(theta);
  }
  res.encoding.delta = res.certified_delta;
  const double c2 = mode == SqrtMode::kExactSupport ? 1.0 : 3.0;
  if (res.certified_delta > c2 * eps / scale)
    throw CertificationError("sqrt_encoding",
                             "certificate exceeds c2*eps/sqrt(d_E*kappa)");
  return res;
}

} // namespace petzsim
