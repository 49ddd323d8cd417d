#include "cheb/weight.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace cheb {

double irwin_hall_pdf(double x, int n, double* approx_error) {
  if (n < 1) throw std::domain_error("irwin_hall_pdf: n must be >= 1");
  if (approx_error) *approx_error = 0.0;
  if (x <= 0.0 || x >= n) return 0.0;
  if (n == 1) return 1.0;
  if (n > 4096) {
    // Gaussian limit: mean n/2, variance n/12; next Edgeworth correction is
    // O(1/n) of the peak value (excess kurtosis -6/(5n))
    double var = n / 12.0;
    double d = x - n / 2.0;
    double g = std::exp(-d * d / (2.0 * var)) /
               std::sqrt(2.0 * std::numbers::pi * var);
    if (approx_error)
      *approx_error = (6.0 / (5.0 * n)) / std::sqrt(2.0 * std::numbers::pi * var);
    return g;
  }
  // Cox-de Boor on the uniform knot vector 0..n: the density is the degree
  // n-1 B-spline N_{0,n-1}. Work with the n-p nonzero degree-p pieces whose
  // support contains x; all recursion weights are in [0,1], so no
  // cancellation.
  int i0 = static_cast<int>(std::floor(x));
  if (i0 >= n) i0 = n - 1;
  // degree 0: N_{i,0}(x) = [i <= x < i+1]
  std::vector<double> N(n, 0.0);
  N[i0] = 1.0;
  for (int p = 1; p <= n - 1; ++p) {
    for (int i = 0; i < n - p; ++i) {
      double a = (x - i) / p * N[i];
      double b = (i + p + 1 - x) / p * N[i + 1];
      N[i] = a + b;
    }
  }
  return N[0];
}

double weight_f(double t, const WeightSpec& spec) {
  spec.validate();
  double x = (t - (spec.B - 2.0 * spec.ell * spec.A)) / spec.A;
  return irwin_hall_pdf(x, 2 * spec.ell) / spec.A;
}

std::complex<double> weight_F(std::complex<double> z, const WeightSpec& spec) {
  spec.validate();
  std::complex<double> w = spec.A * z;
  std::complex<double> factor;
  if (std::abs(w) < 1e-5) {
    // series for (1-e^{-w})/w, avoids cancellation near the removable
    // singularity; truncation error < |w|^4/120 < 1e-21
    factor = 1.0 - w / 2.0 + w * w / 6.0 - w * w * w / 24.0;
  } else {
    factor = (1.0 - std::exp(-w)) / w;
  }
  return std::exp(-(spec.B - 2.0 * spec.ell * spec.A) * z) *
         std::pow(factor, 2 * spec.ell);
}

}  // namespace cheb
