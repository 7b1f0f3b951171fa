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

#ifndef PETZSIM_SVT_HPP
#define PETZSIM_SVT_HPP

#include "petzsim/block_encoding.hpp"
#include "petzsim/chebyshev.hpp"

namespace petzsim {

// Singular value transformation, realized semantically: the encoded block is
// diagonalized, the polynomial is applied to its spectrum and the result is
// re-encoded by unitary dilation. Query counts are modeled as polynomial
// degree times the input encoding's query cost, preserving the complexity
// accounting without phase-factor circuit synthesis.

struct SVTResult {
  BlockEncoding encoding;
  long modeled_queries = 0;     // degree x input query_cost
  double certified_delta = 0.0; // carried certificate of the encoding
};

/// Applies a bounded polynomial to the spectrum of a PSD Hermitian encoded
/// block. `out_alpha` must dominate the polynomial cap. The input
/// encoding's delta propagates through the polynomial's Lipschitz bound
/// on [0,1].
SVTResult svt_apply(const BlockEncoding& be, const ChebyshevPoly& p,
                    double out_alpha);

/// (2*sqrt(kappa), eps/sqrt(d_env))-encoding of the inverse square root of
/// the encoded state, via approx_inv_sqrt with theta = 1/kappa. The
/// certificate constant is 1 (budgets are split internally so the measured
/// block error stays within eps/sqrt(d_env)).
SVTResult inv_sqrt_encoding(const BlockEncoding& be_nsigma, double kappa,
                            double eps, int d_env);

enum class SqrtMode { kExactSupport, kThresholded };

/// (2, eps/sqrt(d_env*kappa_nsigma))-encoding of an approximate square root
/// of the encoded state. Exact-support mode sets theta = 1/kappa_sigma;
/// thresholded mode uses theta = eps^2/(d_env*kappa_nsigma) and carries the
/// constant 3 in its certificate (the below-threshold clamp contributes
/// 2*sqrt(theta)).
SVTResult sqrt_encoding(const BlockEncoding& be_sigma, double kappa_sigma,
                        double eps, int d_env, double kappa_nsigma,
                        SqrtMode mode);

} // namespace petzsim

#endif // PETZSIM_SVT_HPP
