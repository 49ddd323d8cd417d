#ifndef CHEB_KERNEL_HPP
#define CHEB_KERNEL_HPP

#include <utility>

#include "cheb/certificate.hpp"
#include "cheb/log_value.hpp"
#include "cheb/params.hpp"

namespace cheb {

// phi(eps) = 1 + (4/pi) eps + 16 eps^2 + 340 eps^10, eps in (0, 1/8).
// eps = 0 is accepted as the limit value 1.
double compute_phi(double epsilon);

// A1 = 2 (4e(1+1/alpha))^alpha (1+eta),  A = sqrt(A1^2 - 1).
std::pair<double, double> compute_A1_A(double alpha, double eta);

struct XYValues {
  double X;
  double Y;
};

// Y = (2 phi A + 8/lambda) / (e A1 alpha)
// X = (2 log(2A1/(1-omega)) / (1-omega)) * ((1+alpha)/alpha) * (2 phi A + 8/lambda)
XYValues compute_XY(double lambda, const DensityParams& p);

struct JValues {
  double J;      // exp(lnJ); underflows to 0 harmlessly for huge lambda
  double lnJ;    // computed in log domain: (1+eta)^{k0} overflows doubles
  double k0;
  double W1;
  double W2;
};

// k0 = (2 phi A lambda + 8)/alpha
// W1 = 8 A1 (1 + 1/k0) + 2e A1 (Y + 1/2 + (2X+1) e^{-omega lambda X})
// W2 = (2e/omega) A1 e^{-omega lambda X} + 18
// J  = (W1 lambda + W2) / (A1 (1+eta)^{k0})
JValues compute_J(double lambda, const DensityParams& p);

struct Theorem33Result {
  LogValue bound;
  ValidityCertificate cert;
  // constituents, for table/report emission
  double C4, C3, C1, C0, B1, B2;
  double J, X, Y;  // evaluated at xi*lambda
};

// bound = (4 xi / sqrt(xi^2-1)) (C4 l^4 + C3 l^3 + C1 l + C0) e^{B1 l + B2}
//         * (1 - J(xi l))^{-2},  returned in log domain.
Theorem33Result compute_theorem33_bound(double lambda, const DensityParams& p);

// Two-branch scriptL; first branch iff n_K^{5 n_K/6} >= D_K^{4/3} Q^{4/9}
// (compared in log domain; ties take the first branch).
double compute_scriptL(const FieldInvariants& inv);

// calL = log D_K + (1/2) log Q + (n_K/2 + 1) log(T+3) + Theta n_K.
double compute_calL(const FieldInvariants& inv, double Theta = 1.0);

enum class CircleMode { Classical, Convexity };

// Zero-count bound for the circle |s - s0| <= r.
// classical (0 < r <= 1):
//   {4 log D_K + 2 log Nf + 2 n_K log(|t|+3) + 4 + 4 delta} r + 4 + 4 delta
// convexity (0 < r < eps < 1/4):
//   phi(eps) (2 log D_K + log Nf + n_K log(|t|+3)) r + 4 + 4 delta
double circle_zero_bounds(double r, double t, const FieldInvariants& inv,
                          double log_Nf, bool is_trivial, CircleMode mode,
                          double epsilon = 1e-5);

}  // namespace cheb

#endif
