#ifndef CHEB_WEIGHT_HPP
#define CHEB_WEIGHT_HPP

#include <complex>
#include <stdexcept>

namespace cheb {

// f_ell(t; B, A): density of (B - 2lA) + sum of 2l independent U(0, A),
// the unique nonnegative function with Laplace transform
// F(z) = e^{-(B-2lA)z} ((1-e^{-Az})/(Az))^{2l}. Support [B-2lA, B],
// 0 <= f <= 1/A.
struct WeightSpec {
  double B;
  double A;
  int ell;

  void validate() const {
    if (!(A > 0.0) || !(B > 0.0) || ell < 1)
      throw std::domain_error("WeightSpec: need A, B > 0 and ell >= 1");
    if (!(B > 2.0 * ell * A))
      throw std::domain_error("WeightSpec: need B > 2*ell*A");
  }
};

double weight_f(double t, const WeightSpec& spec);

std::complex<double> weight_F(std::complex<double> z, const WeightSpec& spec);

// Irwin-Hall density of the sum of n independent U(0,1) at x, evaluated by
// the uniform B-spline recursion (stable for large n, unlike the
// alternating-binomial closed form). Switches to the Gaussian approximation
// for n > 4096; approx_error (if non-null) receives a bound on the absolute
// error of the returned value (0 in the exact regime, O(1/n) Edgeworth bound
// in the Gaussian regime).
double irwin_hall_pdf(double x, int n, double* approx_error = nullptr);

}  // namespace cheb

#endif
