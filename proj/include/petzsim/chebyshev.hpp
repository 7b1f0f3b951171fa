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

#ifndef PETZSIM_CHEBYSHEV_HPP
#define PETZSIM_CHEBYSHEV_HPP

#include <functional>
#include <vector>

#include "petzsim/linalg.hpp"

namespace petzsim {

/// Bounded polynomial on [-1,1] in the Chebyshev basis, with a certified
/// sup-error over [theta,1] against its target and a certified bound (cap)
/// on |p| over all of [-1,1]. Certificates are measured a posteriori on a
/// 10^4-point grid; they are the contract, the construction recipe is not.
struct ChebyshevPoly {
  std::vector<double> coeffs; // Chebyshev-basis coefficients c_0..c_n
  double theta = 0.0;         // approximation domain is [theta, 1]
  double delta = 0.0;         // requested accuracy parameter
  double sup_error_cert = 0.0;
  double cap = 0.0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Clenshaw evaluation; requires x in [-1,1].
  double eval(double x) const;

  /// Max of |d/dx eval| over [lo,hi], using the derivative series on a grid.
  double derivative_bound(double lo, double hi, int grid_points = 2001) const;
};

/// Max grid deviation from `target` over [lo,hi] with endpoint inclusion.
double sup_error(const ChebyshevPoly& p,
                 const std::function<double(double)>& target, double lo,
                 double hi, int grid_points = 10001);

/// Bounded approximant of x^{-1/2}: sup error over [theta,1] at most
/// 2*delta/sqrt(theta), |p| at most 2/sqrt(theta) on [-1,1].
ChebyshevPoly approx_inv_sqrt(double theta, double delta);

/// Bounded approximant of x^{1/2}: sup error over [theta,1] at most 2*delta,
/// |p| at most 2 on [-1,1].
ChebyshevPoly approx_sqrt(double theta, double delta);

/// Square-root approximant pinned near zero below the threshold:
/// sup error 2*delta on [theta,1] and |p| <= sqrt(theta)+2*delta on [0,theta].
ChebyshevPoly approx_sqrt_thresholded(double theta, double delta);

} // namespace petzsim

#endif // PETZSIM_CHEBYSHEV_HPP
