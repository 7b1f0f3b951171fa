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

#include "petzsim/random.hpp"

namespace petzsim {

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen_);
}

double Rng::gaussian() {
  return std::normal_distribution<double>(0.0, 1.0)(gen_);
}

int Rng::randint(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen_);
}

ComplexMatrix Rng::gaussian_matrix(int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(gaussian(), gaussian());
  return m;
}

ComplexMatrix Rng::haar_unitary(int n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_matrix(n, n));
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= std::abs(d) > 1e-300 ? d / std::abs(d) : Complex(1.0);
  }
  return q;
}

ComplexVector Rng::random_pure(int dim) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gaussian(), gaussian());
  return v / v.norm();
}

DensityMatrix Rng::random_density(int dim, double mix) {
  const ComplexMatrix g = gaussian_matrix(dim, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (1.0 - mix) * rho +
        mix * ComplexMatrix::Identity(dim, dim) / double(dim);
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(rho);
}

QuantumChannel Rng::random_channel(int dim_in, int dim_out, int d_env) {
  if (d_env * dim_out < dim_in)
    throw std::invalid_argument("random_channel: d_env*dim_out below dim_in");
  const ComplexMatrix g = gaussian_matrix(d_env * dim_out, d_env * dim_out);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < d_env; ++i)
    kraus.push_back(q.block(i * dim_out, 0, dim_out, dim_in));
  return QuantumChannel(dim_in, dim_out, std::move(kraus));
}

RealMatrix Rng::random_stochastic(int rows, int cols, double floor) {
  RealMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    double sum = 0.0;
    for (int r = 0; r < rows; ++r) {
      m(r, c) = floor + uniform();
      sum += m(r, c);
    }
    m.col(c) /= sum;
  }
  return m;
}

RealVector Rng::random_distribution(int n, double floor) {
  RealVector v(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    v(i) = floor + uniform();
    sum += v(i);
  }
  return v / sum;
}

} // namespace petzsim
