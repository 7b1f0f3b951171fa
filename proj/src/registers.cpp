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

#include "petzsim/registers.hpp"

#include <numeric>

namespace petzsim {

std::vector<long> register_strides(const std::vector<int>& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
    s[i] = s[i + 1] * dims[i + 1];
  return s;
}

namespace {

long product(const std::vector<int>& dims) {
  long p = 1;
  for (int d : dims) p *= d;
  return p;
}

// Offsets of every joint value of the registers in `sel`, using the given
// per-register strides.
std::vector<long> joint_offsets(const std::vector<int>& sel,
                                const std::vector<int>& sel_dims,
                                const std::vector<long>& strides) {
  long total = 1;
  for (int d : sel_dims) total *= d;
  std::vector<long> offs(total, 0);
  long rep = total;
  for (size_t k = 0; k < sel.size(); ++k) {
    rep /= sel_dims[k];
    long idx = 0;
    for (long g = 0; g < total; ++g) {
      long v = (g / rep) % sel_dims[k];
      offs[g] += v * strides[sel[k]];
      (void)idx;
    }
  }
  return offs;
}

} // namespace

ComplexMatrix apply_op_left(const ComplexMatrix& m, const ComplexMatrix& op,
                            const std::vector<int>& sel,
                            std::vector<int>& dims,
                            const std::vector<int>& out_dims_sel_in) {
  std::vector<int> in_dims_sel(sel.size());
  for (size_t k = 0; k < sel.size(); ++k) in_dims_sel[k] = dims[sel[k]];
  std::vector<int> out_dims_sel =
      out_dims_sel_in.empty() ? in_dims_sel : out_dims_sel_in;

  long k_in = 1, k_out = 1;
  for (int d : in_dims_sel) k_in *= d;
  for (int d : out_dims_sel) k_out *= d;
  if (op.rows() != k_out || op.cols() != k_in)
    throw std::invalid_argument("apply_op_left: operator shape mismatch");
  if (m.rows() != product(dims))
    throw std::invalid_argument("apply_op_left: matrix rows mismatch register dims");

  std::vector<int> dims_out = dims;
  for (size_t k = 0; k < sel.size(); ++k) dims_out[sel[k]] = out_dims_sel[k];

  const auto strides_in = register_strides(dims);
  const auto strides_out = register_strides(dims_out);
  const auto sel_offs_in = joint_offsets(sel, in_dims_sel, strides_in);
  const auto sel_offs_out = joint_offsets(sel, out_dims_sel, strides_out);

  std::vector<int> unsel;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i)
    if (std::find(sel.begin(), sel.end(), i) == sel.end()) unsel.push_back(i);
  std::vector<int> unsel_dims(unsel.size());
  for (size_t k = 0; k < unsel.size(); ++k) unsel_dims[k] = dims[unsel[k]];
  const auto un_offs_in = joint_offsets(unsel, unsel_dims, strides_in);
  const auto un_offs_out = joint_offsets(unsel, unsel_dims, strides_out);

  ComplexMatrix out = ComplexMatrix::Zero(product(dims_out), m.cols());
  for (size_t u = 0; u < un_offs_in.size(); ++u) {
    for (long so = 0; so < k_out; ++so) {
      auto row = out.row(un_offs_out[u] + sel_offs_out[so]);
      for (long si = 0; si < k_in; ++si) {
        const Complex c = op(so, si);
        if (c != Complex(0.0, 0.0))
          row += c * m.row(un_offs_in[u] + sel_offs_in[si]);
      }
    }
  }
  dims = dims_out;
  return out;
}

ComplexMatrix permute_register_rows(const ComplexMatrix& m,
                                    const std::vector<int>& dims,
                                    const std::vector<int>& new_order) {
  if (new_order.size() != dims.size())
    throw std::invalid_argument("permute_register_rows: order size mismatch");
  const long n = product(dims);
  if (m.rows() != n)
    throw std::invalid_argument("permute_register_rows: rows mismatch");
  std::vector<int> dims_new(dims.size());
  for (size_t k = 0; k < dims.size(); ++k) dims_new[k] = dims[new_order[k]];
  const auto strides_old = register_strides(dims);
  const auto strides_new = register_strides(dims_new);

  ComplexMatrix out(n, m.cols());
  std::vector<int> idx(dims.size(), 0);
  for (long g = 0; g < n; ++g) {
    long rem = g;
    long gnew = 0;
    for (size_t k = 0; k < dims.size(); ++k) {
      idx[k] = static_cast<int>(rem / strides_old[k]);
      rem %= strides_old[k];
    }
    for (size_t k = 0; k < dims.size(); ++k)
      gnew += static_cast<long>(idx[new_order[k]]) * strides_new[k];
    out.row(gnew) = m.row(g);
  }
  return out;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<int>& sel,
                             const std::vector<int>& dims_in,
                             const std::vector<int>& out_dims_sel) {
  std::vector<int> dims = dims_in;
  ComplexMatrix id = ComplexMatrix::Identity(product(dims_in), product(dims_in));
  return apply_op_left(id, op, sel, dims, out_dims_sel);
}

} // namespace petzsim
