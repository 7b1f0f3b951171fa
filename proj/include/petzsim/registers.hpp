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

#ifndef PETZSIM_REGISTERS_HPP
#define PETZSIM_REGISTERS_HPP

#include <vector>

#include "petzsim/linalg.hpp"

namespace petzsim {

// Multi-register bookkeeping for composite systems. A register list holds
// per-factor dimensions; global basis indices are row-major (leftmost
// register most significant), matching the kron() convention.

/// Strides of each register in the flattened index.
std::vector<long> register_strides(const std::vector<int>& dims);

/// Left-multiplies `m` by an operator acting on the selected registers
/// (identity elsewhere) without materializing the embedded operator.
/// `sel` lists register positions in the order of the operator's tensor
/// factors. `out_dims_sel` gives the operator's output dimension per
/// selected register (it may differ from the input, e.g. a dilation that
/// relabels E⊗B as E'⊗A); pass {} to keep input dimensions. `dims` is
/// updated in place.
ComplexMatrix apply_op_left(const ComplexMatrix& m, const ComplexMatrix& op,
                            const std::vector<int>& sel,
                            std::vector<int>& dims,
                            const std::vector<int>& out_dims_sel = {});

/// Row-index permutation reordering registers to `new_order`.
ComplexMatrix permute_register_rows(const ComplexMatrix& m,
                                    const std::vector<int>& dims,
                                    const std::vector<int>& new_order);

/// Dense embedding op ⊗ I arranged on the selected registers. Used by
/// tests as an oracle for apply_op_left.
ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<int>& sel,
                             const std::vector<int>& dims_in,
                             const std::vector<int>& out_dims_sel = {});

} // namespace petzsim

#endif // PETZSIM_REGISTERS_HPP
