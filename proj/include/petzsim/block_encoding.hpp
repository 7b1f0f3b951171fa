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

#ifndef PETZSIM_BLOCK_ENCODING_HPP
#define PETZSIM_BLOCK_ENCODING_HPP

#include "petzsim/linalg.hpp"

namespace petzsim {

/// Unitary whose all-zeros-ancilla block encodes a target matrix A/alpha,
/// with error certificate delta: ||A - alpha (<0|⊗I) U (|0>⊗I)|| <= delta.
///
/// Register order is fixed as ancilla ⊗ system with the all-zeros ancilla
/// selecting the block. Encodings may be rectangular (input and output
/// ancilla/system splits differ, e.g. the assembled recovery unitary); for
/// the common square case the in/out splits coincide.
struct BlockEncoding {
  ComplexMatrix unitary;
  double alpha = 1.0;   // subnormalization
  double delta = 0.0;   // carried error certificate, never re-measured implicitly
  int dim_anc_in = 1;
  int dim_sys_in = 0;
  int dim_anc_out = 1;
  int dim_sys_out = 0;
  long query_cost = 1;  // modeled uses of the constructor's underlying unitaries

  static BlockEncoding square(ComplexMatrix u, double alpha, double delta,
                              int dim_anc, int dim_sys, long query_cost = 1);

  bool is_square() const {
    return dim_anc_in == dim_anc_out && dim_sys_in == dim_sys_out;
  }
};

/// alpha * (<0|⊗I) U (|0>⊗I): the encoded matrix including subnormalization.
ComplexMatrix encoded_block(const BlockEncoding& be);

/// Exact block-encoding of a density operator from a circuit preparing its
/// purification on R⊗A: V = U^† (I_R ⊗ SWAP_{AA'}) U, two uses of U.
BlockEncoding from_purification(const ComplexMatrix& u_sigma, int dim_r,
                                int dim_a);

struct VerifyReport {
  double defect = 0.0;    // measured ||target - encoded_block||
  double threshold = 0.0; // max(tol, carried delta)
  bool pass = false;
};

/// Audits an encoding against its intended target.
VerifyReport verify(const BlockEncoding& be, const ComplexMatrix& target,
                    double tol);

/// Unitary dilation [[C, sqrt(I-CC†)], [sqrt(I-C†C), -C†]] of a contraction.
BlockEncoding dilate_contraction(const ComplexMatrix& c);

BlockEncoding tensor_product(const BlockEncoding& a, const BlockEncoding& b);

/// Encoding of (block of a) * (block of b); requires matching system size.
BlockEncoding compose(const BlockEncoding& a, const BlockEncoding& b);

} // namespace petzsim

#endif // PETZSIM_BLOCK_ENCODING_HPP
