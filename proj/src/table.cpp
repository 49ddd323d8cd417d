#include "cheb/table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cheb {

const std::array<PublishedRow, 32>& published_table() {
  static const std::array<PublishedRow, 32> t = {{
      {.287, 198.1, .3448, .09955, .03466, 1.0082, .46, 5.8, 993},
      {.288, 198.3, .3444, .09943, .03462, 1.0082, .46, 5.8, 991},
      {.289, 198.5, .3441, .09931, .03458, 1.0082, .46, 5.8, 988},
      {.290, 198.7, .3437, .09918, .03454, 1.0082, .46, 5.8, 986},
      {.291, 198.9, .3433, .09906, .03450, 1.0082, .46, 5.8, 984},
      {.292, 199.1, .3429, .09894, .03446, 1.0081, .46, 5.8, 982},
      {.293, 199.3, .3426, .09882, .03442, 1.0081, .46, 5.8, 979},
      {.294, 199.5, .3422, .09870, .03439, 1.0081, .46, 5.8, 977},
      {.295, 199.8, .3418, .09859, .03435, 1.0081, .46, 5.8, 975},
      {.296, 200.0, .3415, .09847, .03431, 1.0081, .46, 5.8, 973},
      {.297, 200.2, .3411, .09835, .03427, 1.0080, .46, 5.8, 970},
      {.298, 200.4, .3408, .09823, .03423, 1.0080, .46, 5.8, 968},
      {.299, 200.6, .3404, .09811, .03420, 1.0080, .46, 5.8, 966},
      {.300, 200.8, .3400, .09800, .03416, 1.0080, .46, 5.8, 964},
      {.325, 205.9, .3316, .09518, .03326, 1.0075, .47, 5.8, 914},
      {.350, 211.0, .3240, .09257, .03242, 1.0071, .47, 5.7, 871},
      {.375, 216.0, .3171, .09014, .03163, 1.0067, .47, 5.7, 833},
      {.400, 220.9, .3108, .08787, .03090, 1.0064, .48, 5.7, 800},
      {.425, 225.7, .3054, .08678, .02878, 1.0061, .46, 5.6, 769},
      {.450, 230.4, .2998, .08373, .02956, 1.0059, .48, 5.6, 744},
      {.475, 235.1, .2948, .08184, .02895, 1.0056, .48, 5.6, 720},
      {.500, 239.8, .2903, .08006, .02837, 1.0054, .49, 5.6, 699},
      {.550, 249.0, .2821, .07677, .02729, 1.0050, .49, 5.5, 661},
      {.600, 258.0, .2748, .07379, .02631, 1.0046, .50, 5.5, 629},
      {.650, 266.9, .2684, .07109, .02542, 1.0043, .50, 5.4, 602},
      {.700, 275.6, .2627, .06862, .02460, 1.0041, .50, 5.4, 579},
      {.750, 284.3, .2576, .06634, .02383, 1.0039, .51, 5.4, 559},
      {.800, 292.9, .2529, .06424, .02313, 1.0037, .51, 5.4, 541},
      {.850, 301.4, .2486, .06230, .02247, 1.0035, .51, 5.3, 525},
      {.900, 309.8, .2447, .06049, .02186, 1.0033, .51, 5.3, 510},
      {.950, 318.2, .2412, .05880, .02128, 1.0032, .52, 5.3, 497},
      {1.00, 326.5, .2378, .05722, .02074, 1.0030, .52, 5.3, 486},
  }};
  return t;
}

LogValue N_envelope(double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("N_envelope: lambda must be > 0");
  if (lambda <= 0.0875) return LogValue::from_ln(0.0);
  if (lambda <= 0.2866) return LogValue::from_ln(std::log(2.0));
  if (lambda <= 1.0) {
    for (const auto& r : published_table())
      if (lambda <= r.lambda) return LogValue::from_ln(r.log_bound);
    return LogValue::from_ln(published_table().back().log_bound);
  }
  return LogValue::from_ln(162.0 * lambda + 188.0);
}

ValidityCertificate verify_lfzd_main(double epsilon) {
  ValidityCertificate cert;
  double phi = compute_phi(epsilon);
  const double alpha = 0.15, eta = 1e-5, omega = 1e-5, xi = 1.0 + 1e-5;
  auto [A1, A] = compute_A1_A(alpha, eta);

  DensityParams p{alpha, eta, omega, xi, 1e-5, epsilon};
  // X, Y at a representative lambda >= lambda0 plus the lambda->inf limit:
  // Y decreases in lambda toward 2 phi A/(e A1 alpha), so checking the limit
  // and one finite point brackets the whole range.
  XYValues xy = compute_XY(xi * 0.0875, p);
  double Yinf = 2.0 * phi * A / (std::numbers::e * A1 * alpha);
  cert.add("X > Y (at lambda = 0.0875)", xy.X, ">", xy.Y, "sec. 6 proof");
  cert.add("Y > 4.6 (at lambda = 0.0875)", xy.Y, ">", 4.6, "sec. 6 proof");
  cert.add("Y limit (lambda -> inf) > 4.6", Yinf, ">", 4.6, "sec. 6 proof");

  double L = std::log(4.0 * std::numbers::e / alpha * (1.0 + alpha) *
                      std::pow(2.0, (1.0 + alpha) / alpha));
  double B1 = 4.0 * phi * A * xi * L;
  cert.add("B1 <= 146.15 phi", B1, "<=", 146.15 * phi, "sec. 6 proof");
  cert.add("xi*A1 < 4", xi * A1, "<", 4.0, "sec. 6 proof");

  double v = 146.2 * phi;
  if (epsilon == 0.05)
    cert.add("146.2 phi < 162 (eps = 0.05)", v, "<", 162.0, "sec. 6 proof");
  else if (epsilon == 1e-3)
    cert.add("146.2 phi < 147 (eps = 1e-3)", v, "<", 147.0, "sec. 6 proof");
  else
    cert.add("146.2 phi < 162 (general eps)", v, "<", 162.0, "sec. 6 proof");
  return cert;
}

DensityParams lowlying_params() {
  return DensityParams{0.1549, 0.05722, 0.02074, 1.0030, 0.1, 1e-5};
}

ValidityCertificate verify_lowlying_envelope() {
  ValidityCertificate cert;
  DensityParams p = lowlying_params();
  auto [A1, A] = compute_A1_A(p.alpha, p.eta);
  double phi = compute_phi(p.epsilon);

  const double LAM_MAX = 1e4;
  // dense near 1 where X, J vary fastest; log-spaced beyond
  std::vector<double> grid;
  for (int i = 0; i <= 2000; ++i) grid.push_back(1.0 + 9.0 * i / 2000.0);
  for (int i = 1; i <= 2000; ++i)
    grid.push_back(10.0 * std::pow(LAM_MAX / 10.0, i / 2000.0));

  double minY = 1e300, maxY = -1e300, minX = 1e300, maxX = -1e300, maxJ = 0.0;
  double maxC4 = 0.0, maxC3 = 0.0, maxC1 = 0.0, maxC0 = 0.0;
  double maxB1 = 0.0, maxB2 = 0.0;
  bool envelope_ok = true;
  double worst_gap = 1e300;
  for (double lam : grid) {
    Theorem33Result r = compute_theorem33_bound(lam, p);
    minY = std::min(minY, r.Y);
    maxY = std::max(maxY, r.Y);
    minX = std::min(minX, r.X);
    maxX = std::max(maxX, r.X);
    maxJ = std::max(maxJ, r.J);
    maxC4 = std::max(maxC4, r.C4);
    maxC3 = std::max(maxC3, r.C3);
    maxC1 = std::max(maxC1, r.C1);
    maxC0 = std::max(maxC0, r.C0);
    maxB1 = std::max(maxB1, r.B1);
    maxB2 = std::max(maxB2, r.B2);
    double lhs = std::log(52.0 * (6.0e13 * std::pow(lam, 4) +
                                  2.4e14 * std::pow(lam, 3) + 17.0 * lam +
                                  65.0)) + 156.0 * lam + 154.0;
    double rhs = 162.0 * lam + 188.0;
    worst_gap = std::min(worst_gap, rhs - lhs);
    if (lhs > rhs) envelope_ok = false;
  }
  // limits: Y and X decrease in lambda toward finite positive limits
  double Yinf = 2.0 * phi * A / (std::numbers::e * A1 * p.alpha);
  double Xinf = (2.0 * std::log(2.0 * A1 / (1.0 - p.omega)) / (1.0 - p.omega)) *
                ((1.0 + p.alpha) / p.alpha) * (2.0 * phi * A);

  cert.add("min Y over grid >= 4.61", std::min(minY, Yinf), ">=", 4.61,
           "thm:LFZD-LowLying proof");
  cert.add("max Y over grid <= 9.2", maxY, "<=", 9.2, "thm:LFZD-LowLying proof");
  cert.add("min X over grid >= 264", std::min(minX, Xinf), ">=", 264.0,
           "thm:LFZD-LowLying proof");
  cert.add("max X over grid <= 526", maxX, "<=", 526.0,
           "thm:LFZD-LowLying proof");
  cert.add("max J over grid <= 0.272", maxJ, "<=", 0.272,
           "thm:LFZD-LowLying proof");
  cert.add("C4 <= 6.0e13", maxC4, "<=", 6.0e13, "thm:LFZD-LowLying proof");
  cert.add("C3 <= 2.4e14", maxC3, "<=", 2.4e14, "thm:LFZD-LowLying proof");
  cert.add("C1 <= 17", maxC1, "<=", 17.0, "thm:LFZD-LowLying proof");
  cert.add("C0 <= 65", maxC0, "<=", 65.0, "thm:LFZD-LowLying proof");
  cert.add("B1 <= 156", maxB1, "<=", 156.0, "thm:LFZD-LowLying proof");
  cert.add("B2 <= 154", maxB2, "<=", 154.0, "thm:LFZD-LowLying proof");
  cert.add("envelope ln(52*poly)+156l+154 <= 162l+188 on grid (min gap)",
           envelope_ok ? worst_gap : -1.0, ">=", 0.0,
           "thm:LFZD-LowLying proof");
  // beyond the grid the gap 6l + 34 - ln(52*poly(l)) keeps growing:
  // d/dl ln(poly) <= 4/l < 6 for l >= LAM_MAX
  cert.add("gap increasing beyond grid: d/dl ln(poly) <= 4/Lmax < 6",
           4.0 / LAM_MAX, "<", 6.0, "thm:LFZD-LowLying proof");
  return cert;
}

}  // namespace cheb
