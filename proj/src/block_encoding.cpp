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

#include "petzsim/block_encoding.hpp"

#include <cmath>

#include "petzsim/registers.hpp"

namespace petzsim {

BlockEncoding BlockEncoding::square(ComplexMatrix u, double alpha, double delta,
                                    int dim_anc, int dim_sys, long query_cost) {
  BlockEncoding be;
  be.unitary = std::move(u);
  be.alpha = alpha;
  be.delta = delta;
  be.dim_anc_in = be.dim_anc_out = dim_anc;
  be.dim_sys_in = be.dim_sys_out = dim_sys;
  be.query_cost = query_cost;
  if (be.unitary.rows() != static_cast<Eigen::Index>(dim_anc) * dim_sys ||
      be.unitary.cols() != be.unitary.rows())
    throw std::invalid_argument("BlockEncoding: dimension bookkeeping mismatch");
  return be;
}

ComplexMatrix encoded_block(const BlockEncoding& be) {
  // Ancilla-first ordering: the all-zeros ancilla selects the leading
  // dim_sys_out x dim_sys_in corner.
  return be.alpha *
         be.unitary.topLeftCorner(be.dim_sys_out, be.dim_sys_in);
}

BlockEncoding from_purification(const ComplexMatrix& u_sigma, int dim_r,
                                int dim_a) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_r) * dim_a;
  if (u_sigma.rows() != n || u_sigma.cols() != n)
    throw std::invalid_argument("from_purification: purifier shape mismatch");
  if ((u_sigma * u_sigma.adjoint() - ComplexMatrix::Identity(n, n))
          .cwiseAbs()
          .maxCoeff() > 1e-9)
    throw std::invalid_argument("from_purification: purifier not unitary");

  ComplexMatrix swap = ComplexMatrix::Zero(dim_a * dim_a, dim_a * dim_a);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j) swap(j * dim_a + i, i * dim_a + j) = 1.0;

  // Registers [R, A, A']; ancilla (R, A) leads, system A' trails.
  std::vector<int> dims = {dim_r, dim_a, dim_a};
  ComplexMatrix v = embed_operator(u_sigma, {0, 1}, dims);
  v = apply_op_left(v, swap, {1, 2}, dims);
  std::vector<int> dims2 = {dim_r, dim_a, dim_a};
  v = apply_op_left(v, ComplexMatrix(u_sigma.adjoint()), {0, 1}, dims2);

  return BlockEncoding::square(std::move(v), 1.0, 0.0, dim_r * dim_a, dim_a,
                               /*query_cost=*/2);
}

VerifyReport verify(const BlockEncoding& be, const ComplexMatrix& target,
                    double tol) {
  if (target.rows() != be.dim_sys_out || target.cols() != be.dim_sys_in)
    throw std::invalid_argument("verify: target dimension mismatch");
  VerifyReport r;
  r.defect = spectral_norm(target - encoded_block(be));
  r.threshold = std::max(tol, be.delta);
  r.pass = r.defect <= r.threshold;
  return r;
}

BlockEncoding dilate_contraction(const ComplexMatrix& c) {
  if (c.rows() != c.cols())
    throw std::invalid_argument("dilate_contraction: matrix not square");
  const Eigen::Index n = c.rows();
  Eigen::JacobiSVD<ComplexMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RealVector s = svd.singularValues();
  if (s.size() > 0 && s(0) > 1.0 + 1e-12)
    throw std::invalid_argument("dilate_contraction: spectral norm " +
                                std::to_string(s(0)) + " exceeds 1");
  RealVector comp(n);
  for (Eigen::Index i = 0; i < n; ++i)
    comp(i) = std::sqrt(std::max(0.0, 1.0 - std::min(1.0, s(i)) * std::min(1.0, s(i))));

  const ComplexMatrix s1 =
      svd.matrixU() * comp.asDiagonal() * svd.matrixU().adjoint();
  const ComplexMatrix s2 =
      svd.matrixV() * comp.asDiagonal() * svd.matrixV().adjoint();

  ComplexMatrix u(2 * n, 2 * n);
  u.topLeftCorner(n, n) = c;
  u.topRightCorner(n, n) = s1;
  u.bottomLeftCorner(n, n) = s2;
  u.bottomRightCorner(n, n) = -c.adjoint();
  return BlockEncoding::square(std::move(u), 1.0, 0.0, 2, static_cast<int>(n));
}

BlockEncoding tensor_product(const BlockEncoding& a, const BlockEncoding& b) {
  ComplexMatrix u = kron(a.unitary, b.unitary);
  // Reorder (anc_a, sys_a, anc_b, sys_b) -> (anc_a, anc_b, sys_a, sys_b)
  // on both sides.
  const std::vector<int> order = {0, 2, 1, 3};
  u = permute_register_rows(
      u, {a.dim_anc_out, a.dim_sys_out, b.dim_anc_out, b.dim_sys_out}, order);
  u = permute_register_rows(
          ComplexMatrix(u.adjoint()),
          {a.dim_anc_in, a.dim_sys_in, b.dim_anc_in, b.dim_sys_in}, order)
          .adjoint();

  BlockEncoding out;
  out.unitary = std::move(u);
  out.alpha = a.alpha * b.alpha;
  out.delta = a.alpha * b.delta + b.alpha * a.delta + a.delta * b.delta;
  out.dim_anc_in = a.dim_anc_in * b.dim_anc_in;
  out.dim_sys_in = a.dim_sys_in * b.dim_sys_in;
  out.dim_anc_out = a.dim_anc_out * b.dim_anc_out;
  out.dim_sys_out = a.dim_sys_out * b.dim_sys_out;
  out.query_cost = a.query_cost + b.query_cost;
  return out;
}

BlockEncoding compose(const BlockEncoding& a, const BlockEncoding& b) {
  if (a.dim_sys_in != b.dim_sys_out)
    throw std::invalid_argument("compose: system dimension mismatch");
  // Registers [anc_a, anc_b, sys]; b acts first.
  std::vector<int> dims = {a.dim_anc_in, b.dim_anc_in, b.dim_sys_in};
  long total = static_cast<long>(dims[0]) * dims[1] * dims[2];
  ComplexMatrix u = ComplexMatrix::Identity(total, total);
  u = apply_op_left(u, b.unitary, {1, 2}, dims, {b.dim_anc_out, b.dim_sys_out});
  u = apply_op_left(u, a.unitary, {0, 2}, dims, {a.dim_anc_out, a.dim_sys_out});

  BlockEncoding out;
  out.unitary = std::move(u);
  out.alpha = a.alpha * b.alpha;
  out.delta = a.alpha * b.delta + b.alpha * a.delta;
  out.dim_anc_in = a.dim_anc_in * b.dim_anc_in;
  out.dim_sys_in = b.dim_sys_in;
  out.dim_anc_out = a.dim_anc_out * b.dim_anc_out;
  out.dim_sys_out = a.dim_sys_out;
  out.query_cost = a.query_cost + b.query_cost;
  return out;
}

} // namespace petzsim
