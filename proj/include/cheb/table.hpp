#ifndef CHEB_TABLE_HPP
#define CHEB_TABLE_HPP

#include <array>
#include <vector>

#include "cheb/certificate.hpp"
#include "cheb/kernel.hpp"
#include "cheb/log_value.hpp"
#include "cheb/params.hpp"

namespace cheb {

struct DensityTableRow {
  double lambda;
  DensityParams params;
  double J;
  double Y;
  double X;
  double log_bound;
};

// The published 32-row table: lambda, log-bound, alpha, eta, omega, xi, J, Y, X
// (upsilon = 0.1, epsilon = 1e-5 throughout).
struct PublishedRow {
  double lambda, log_bound, alpha, eta, omega, xi, J, Y, X;
};
const std::array<PublishedRow, 32>& published_table();

// Best-known bound on the zero count N(lambda):
//   1 for lambda <= 0.0875, 2 for lambda <= 0.2866,
//   step function through the published table on (0.2866, 1]
//   (value of the smallest grid point >= lambda), e^{162 lambda + 188} beyond.
LogValue N_envelope(double lambda);

// Section-6 derivation checks with its parameter block
// (xi = 1+1e-5, upsilon = eta = omega = 1e-5, alpha = 0.15):
// X > Y > 4.6, B1 <= 146.15 phi, xi*A1 < 4, and 146.2 phi(eps) vs the
// claimed threshold (162 for eps = 0.05, 147 for eps = 1e-3).
ValidityCertificate verify_lfzd_main(double epsilon);

// Low-lying envelope derivation with alpha = 0.1549, eta = 0.05722,
// eps = 1e-5, upsilon = 0.1, xi = 1.0030, omega = 0.02074: range checks
// Y in [4.61, 9.2], X in [264, 526], J <= 0.272 over a grid on
// [1, 1e4] plus limit checks, the constant caps C4 <= 6.0e13, C3 <= 2.4e14,
// C1 <= 17, C0 <= 65, B1 <= 156, B2 <= 154, and the final
// 52*(poly) e^{156 l + 154} <= e^{162 l + 188} envelope.
ValidityCertificate verify_lowlying_envelope();

// Parameters used by verify_lowlying_envelope (exposed for tests/CLI).
DensityParams lowlying_params();

}  // namespace cheb

#endif
