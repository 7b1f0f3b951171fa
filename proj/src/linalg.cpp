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

#include "petzsim/linalg.hpp"

#include <cmath>
#include <sstream>

namespace petzsim {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, int d1, int d2) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
    throw std::invalid_argument("partial_trace_first: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (int k = 0; k < d1; ++k)
    out += m.block(k * d2, k * d2, d2, d2);
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, int d1, int d2) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
    throw std::invalid_argument("partial_trace_second: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      out(i, j) = m.block(i * d2, j * d2, d2, d2).trace();
  return out;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexVector basis_vector(int dim, int index) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

ComplexMatrix unitary_with_first_column(const ComplexVector& v) {
  const int n = static_cast<int>(v.size());
  if (std::abs(v.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("unitary_with_first_column: vector not normalized");
  Complex alpha = std::abs(v(0)) > 1e-14 ? v(0) / std::abs(v(0)) : Complex(1.0);
  ComplexVector w = v;
  w(0) += alpha;
  ComplexMatrix p = ComplexMatrix::Identity(n, n) -
                    (2.0 / w.squaredNorm()) * (w * w.adjoint());
  return -alpha * p;
}

ComplexMatrix complete_isometry(const ComplexMatrix& v) {
  const Eigen::Index n = v.rows(), m = v.cols();
  if (m > n) throw std::invalid_argument("complete_isometry: more columns than rows");
  if ((v.adjoint() * v - ComplexMatrix::Identity(m, m)).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("complete_isometry: columns not orthonormal");
  if (m == n) return v;
  Eigen::HouseholderQR<ComplexMatrix> qr(v);
  ComplexMatrix q = qr.householderQ();
  // col(v) spans the first m columns of q, so the rest is an orthonormal
  // complement; keep v itself in the leading block.
  ComplexMatrix out(n, n);
  out.leftCols(m) = v;
  out.rightCols(n - m) = q.rightCols(n - m);
  return out;
}

//=========================================================================
// Spectral decomposition
//=========================================================================

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition eig_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eig_hermitian: matrix not square");
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream os;
    os << "eig_hermitian: input not Hermitian, symmetry defect " << defect
       << " exceeds tolerance " << tol;
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed");
  const Eigen::Index n = m.rows();
  SpectralDecomposition out;
  out.eigenvalues = RealVector(n);
  out.eigenvectors = ComplexMatrix(n, n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
    out.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return out;
}

ComplexMatrix matrix_function_psd(const ComplexMatrix& m,
                                  const std::function<double(double)>& f,
                                  double null_threshold) {
  SpectralDecomposition sd = eig_hermitian(m);
  const Eigen::Index n = m.rows();
  RealVector fvals = RealVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = sd.eigenvalues(i);
    if (lam > null_threshold) {
      const double y = f(lam);
      if (!std::isfinite(y)) {
        std::ostringstream os;
        os << "matrix_function_psd: function undefined at retained eigenvalue "
           << lam;
        throw std::domain_error(os.str());
      }
      fvals(i) = y;
    }
  }
  return sd.eigenvectors * fvals.asDiagonal() * sd.eigenvectors.adjoint();
}

ComplexMatrix matrix_function_psd(const ComplexMatrix& m,
                                  const std::function<double(double)>& f) {
  return matrix_function_psd(m, f, 1e-12 * spectral_norm(m));
}

double condition_bound(const ComplexMatrix& m, double rel_threshold) {
  SpectralDecomposition sd = eig_hermitian(m);
  const double cutoff = rel_threshold * std::abs(sd.eigenvalues(0));
  double min_nz = -1.0;
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i)
    if (sd.eigenvalues(i) > cutoff) min_nz = sd.eigenvalues(i);
  if (min_nz <= 0.0)
    throw std::invalid_argument("condition_bound: matrix has no nonzero eigenvalues");
  return 1.0 / min_nz;
}

//=========================================================================
// Density matrices
//=========================================================================

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols())
    throw std::invalid_argument("DensityMatrix: matrix not square");
  const double hd = hermiticity_defect(mat_);
  if (hd > 1e-10)
    throw std::invalid_argument("DensityMatrix: not Hermitian, defect " +
                                std::to_string(hd));
  if (std::abs(mat_.trace().real() - 1.0) > 1e-10 ||
      std::abs(mat_.trace().imag()) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace not 1");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(es.eigenvalues().minCoeff()));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / double(dim));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  ComplexVector v = psi / psi.norm();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::diagonal(const RealVector& probs) {
  ComplexMatrix m = ComplexMatrix::Zero(probs.size(), probs.size());
  for (Eigen::Index i = 0; i < probs.size(); ++i) m(i, i) = probs(i);
  return DensityMatrix(m);
}

} // namespace petzsim
