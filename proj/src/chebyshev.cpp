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

#include "petzsim/chebyshev.hpp"

#include <algorithm>
#include <cmath>

namespace petzsim {

double ChebyshevPoly::eval(double x) const {
  if (x < -1.0 - 1e-12 || x > 1.0 + 1e-12)
    throw std::domain_error("ChebyshevPoly::eval: x outside [-1,1]");
  if (coeffs.empty()) return 0.0;
  x = std::clamp(x, -1.0, 1.0);
  double b1 = 0.0, b2 = 0.0;
  for (size_t k = coeffs.size() - 1; k >= 1; --k) {
    const double b0 = 2.0 * x * b1 - b2 + coeffs[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + coeffs[0];
}

namespace {

std::vector<double> derivative_coeffs(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {0.0};
  std::vector<double> d(n + 1, 0.0);
  for (int k = n - 1; k >= 0; --k)
    d[k] = (k + 2 <= n - 1 ? d[k + 2] : 0.0) + 2.0 * (k + 1) * c[k + 1];
  d[0] *= 0.5;
  d.resize(n);
  return d;
}

} // namespace

double ChebyshevPoly::derivative_bound(double lo, double hi,
                                       int grid_points) const {
  ChebyshevPoly dp;
  dp.coeffs = derivative_coeffs(coeffs);
  double best = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = lo + (hi - lo) * i / (grid_points - 1);
    best = std::max(best, std::abs(dp.eval(x)));
  }
  return best;
}

double sup_error(const ChebyshevPoly& p,
                 const std::function<double(double)>& target, double lo,
                 double hi, int grid_points) {
  double best = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = lo + (hi - lo) * i / (grid_points - 1);
    best = std::max(best, std::abs(p.eval(x) - target(x)));
  }
  return best;
}

//=========================================================================
// Targets: exact on [theta,1], smooth bounded continuation below
//=========================================================================

namespace {

// C^inf step: 0 for t<=0, 1 for t>=1.
double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

using Target = std::function<double(double)>;

Target windowed_inv_sqrt(double theta) {
  const double lo = theta / 2.0;
  return [theta, lo](double x) {
    const double w = smooth_step((x - lo) / (theta - lo));
    if (w <= 0.0) return 0.0;
    return w / std::sqrt(x);
  };
}

// Smoothly clamps the argument of sqrt to theta below the transition band,
// so the target equals sqrt(x) on [theta,1] and plateaus at sqrt(theta).
Target clamped_sqrt(double theta) {
  const double lo = theta / 2.0;
  return [theta, lo](double x) {
    const double w = smooth_step((x - lo) / (theta - lo));
    return std::sqrt(theta + (x - theta) * w);
  };
}

Target windowed_sqrt(double theta) {
  const double lo = theta / 2.0;
  const Target base = clamped_sqrt(theta);
  return [base, theta, lo](double x) {
    const double w = smooth_step((x - lo) / (theta - lo));
    if (w <= 0.0) return 0.0;
    return base(x) * w;
  };
}

// Interpolation at the n+1 roots of T_{n+1}. Node angles are reduced with
// exact integer arithmetic to keep cos() accurate at high degree.
std::vector<double> cheb_fit(const Target& f, int n) {
  const long m = n + 1;
  std::vector<double> fx(m);
  for (long j = 0; j < m; ++j)
    fx[j] = f(std::cos(M_PI * (j + 0.5) / m));
  std::vector<double> c(m, 0.0);
  const long period = 4 * m;
  for (long k = 0; k < m; ++k) {
    double acc = 0.0;
    for (long j = 0; j < m; ++j) {
      const long r = (k * (2 * j + 1)) % period;
      acc += fx[j] * std::cos(M_PI * r / (2.0 * m));
    }
    c[k] = 2.0 * acc / m;
  }
  c[0] *= 0.5;
  return c;
}

struct FitSpec {
  Target target;        // function being fit over all of [-1,1]
  Target reference;     // exact function compared on [theta,1]
  double err_budget;    // sup-error allowance on [theta,1]
  double cap_budget;    // |p| allowance on [-1,1]
  // optional extra band check, disabled when hi <= lo
  double band_lo = 0.0, band_hi = -1.0, band_budget = 0.0;
};

constexpr int kCertGrid = 10001;
constexpr int kMaxDegree = 20000;

bool certify(const ChebyshevPoly& p, const FitSpec& spec, double* err_out,
             double* cap_out) {
  const double err = sup_error(p, spec.reference, p.theta, 1.0, kCertGrid);
  double cap = 0.0;
  for (int i = 0; i < kCertGrid; ++i) {
    const double x = -1.0 + 2.0 * i / (kCertGrid - 1);
    cap = std::max(cap, std::abs(p.eval(x)));
  }
  *err_out = err;
  *cap_out = cap;
  if (err > spec.err_budget || cap > spec.cap_budget) return false;
  if (spec.band_hi > spec.band_lo) {
    double band = 0.0;
    for (int i = 0; i < 2001; ++i) {
      const double x = spec.band_lo + (spec.band_hi - spec.band_lo) * i / 2000.0;
      band = std::max(band, std::abs(p.eval(x)));
    }
    if (band > spec.band_budget) return false;
  }
  return true;
}

ChebyshevPoly fit_certified(double theta, double delta, const FitSpec& spec,
                            const char* what) {
  auto attempt = [&](int n, ChebyshevPoly* out) {
    ChebyshevPoly p;
    p.coeffs = cheb_fit(spec.target, n);
    p.theta = theta;
    p.delta = delta;
    double err = 0.0, cap = 0.0;
    const bool ok = certify(p, spec, &err, &cap);
    p.sup_error_cert = err;
    p.cap = cap;
    *out = std::move(p);
    return ok;
  };

  // Grow until the certificates hold, then refine to the smallest degree
  // that still passes.
  int prev = 1, n = 4;
  ChebyshevPoly found;
  while (n <= kMaxDegree) {
    if (attempt(n, &found)) break;
    prev = n;
    n = std::max(n + 2, n + n / 4);
  }
  if (n > kMaxDegree)
    throw CertificationError(what, "no polynomial up to degree " +
                                       std::to_string(kMaxDegree) +
                                       " met the certificates");
  int lo = prev, hi = n;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    ChebyshevPoly cand;
    if (attempt(mid, &cand)) {
      hi = mid;
      found = std::move(cand);
    } else {
      lo = mid;
    }
  }
  return found;
}

void check_params(double theta, double delta, const char* what) {
  if (!(theta > 0.0 && theta <= 0.5))
    throw std::invalid_argument(std::string(what) + ": theta outside (0, 1/2]");
  if (!(delta > 0.0 && delta <= 0.5))
    throw std::invalid_argument(std::string(what) + ": delta outside (0, 1/2]");
}

} // namespace

ChebyshevPoly approx_inv_sqrt(double theta, double delta) {
  check_params(theta, delta, "approx_inv_sqrt");
  FitSpec spec;
  spec.target = windowed_inv_sqrt(theta);
  spec.reference = [](double x) { return 1.0 / std::sqrt(x); };
  spec.err_budget = 2.0 * delta / std::sqrt(theta);
  spec.cap_budget = 2.0 / std::sqrt(theta);
  return fit_certified(theta, delta, spec, "approx_inv_sqrt");
}

ChebyshevPoly approx_sqrt(double theta, double delta) {
  check_params(theta, delta, "approx_sqrt");
  FitSpec spec;
  spec.target = clamped_sqrt(theta);
  spec.reference = [](double x) { return std::sqrt(x); };
  spec.err_budget = 2.0 * delta;
  spec.cap_budget = 2.0;
  return fit_certified(theta, delta, spec, "approx_sqrt");
}

ChebyshevPoly approx_sqrt_thresholded(double theta, double delta) {
  check_params(theta, delta, "approx_sqrt_thresholded");
  FitSpec spec;
  spec.target = windowed_sqrt(theta);
  spec.reference = [](double x) { return std::sqrt(x); };
  spec.err_budget = 2.0 * delta;
  spec.cap_budget = 2.0;
  spec.band_lo = 0.0;
  spec.band_hi = theta;
  spec.band_budget = std::sqrt(theta) + 2.0 * delta;
  return fit_certified(theta, delta, spec, "approx_sqrt_thresholded");
}

} // namespace petzsim
