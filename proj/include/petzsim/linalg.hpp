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

#ifndef PETZSIM_LINALG_HPP
#define PETZSIM_LINALG_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace petzsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Thrown when a numerically certified bound fails to hold.
class CertificationError : public std::runtime_error {
public:
  explicit CertificationError(const std::string& stage, const std::string& what)
      : std::runtime_error("certification failure [" + stage + "]: " + what),
        stage_(stage) {}
  const std::string& stage() const { return stage_; }

private:
  std::string stage_;
};

//=========================================================================
// Basic matrix helpers
//=========================================================================

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over the first factor of a (d1*d2)x(d1*d2) bipartite operator.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, int d1, int d2);

/// Trace over the second factor of a (d1*d2)x(d1*d2) bipartite operator.
ComplexMatrix partial_trace_second(const ComplexMatrix& m, int d1, int d2);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

/// Sum of singular values (Schatten 1-norm).
double trace_norm(const ComplexMatrix& m);

double hermiticity_defect(const ComplexMatrix& m);

ComplexVector basis_vector(int dim, int index);

/// Deterministic unitary whose first column equals the given unit vector.
ComplexMatrix unitary_with_first_column(const ComplexVector& v);

/// Completes an isometry (orthonormal columns) to a square unitary [V | C].
ComplexMatrix complete_isometry(const ComplexMatrix& v);

//=========================================================================
// Spectral decomposition of Hermitian matrices
//=========================================================================

struct SpectralDecomposition {
  RealVector eigenvalues;     // sorted descending
  ComplexMatrix eigenvectors; // unitary, columns match eigenvalues

  ComplexMatrix reconstruct() const;
};

/// Hermitian eigendecomposition. Rejects inputs whose symmetry defect
/// exceeds `tol`, reporting the measured defect.
SpectralDecomposition eig_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/// Applies a real function to the spectrum of a PSD Hermitian matrix.
/// Eigenvalues at or below `null_threshold` map to zero (pseudo-inverse
/// convention); `f` must be finite on every retained eigenvalue.
ComplexMatrix matrix_function_psd(const ComplexMatrix& m,
                                  const std::function<double(double)>& f,
                                  double null_threshold);

/// matrix_function_psd with the default relative null threshold
/// 1e-12 * spectral_norm(m).
ComplexMatrix matrix_function_psd(const ComplexMatrix& m,
                                  const std::function<double(double)>& f);

/// Reciprocal of the smallest nonzero eigenvalue of a PSD matrix,
/// with the default relative null threshold.
double condition_bound(const ComplexMatrix& m, double rel_threshold = 1e-12);

//=========================================================================
// Density matrices
//=========================================================================

class DensityMatrix {
public:
  /// Validates Hermiticity (1e-10), positivity (eigenvalues >= -1e-10)
  /// and unit trace (1e-10).
  explicit DensityMatrix(ComplexMatrix m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }

  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix diagonal(const RealVector& probs);

private:
  ComplexMatrix mat_;
};

} // namespace petzsim

#endif // PETZSIM_LINALG_HPP
