#include "cheb/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cheb {

double compute_phi(double epsilon) {
  if (epsilon < 0.0 || epsilon >= 0.125 || std::isnan(epsilon))
    throw std::domain_error("compute_phi: epsilon must be in [0, 1/8)");
  return 1.0 + (4.0 / std::numbers::pi) * epsilon + 16.0 * epsilon * epsilon +
         340.0 * std::pow(epsilon, 10);
}

std::pair<double, double> compute_A1_A(double alpha, double eta) {
  if (!(alpha > 0.0) || !(eta > 0.0))
    throw std::domain_error("compute_A1_A: alpha and eta must be > 0");
  double A1 = 2.0 * std::pow(4.0 * std::numbers::e * (1.0 + 1.0 / alpha), alpha) *
              (1.0 + eta);
  double A = std::sqrt(A1 * A1 - 1.0);
  return {A1, A};
}

XYValues compute_XY(double lambda, const DensityParams& p) {
  if (!(lambda > 0.0)) throw std::domain_error("compute_XY: lambda must be > 0");
  p.validate();
  auto [A1, A] = compute_A1_A(p.alpha, p.eta);
  double phi = compute_phi(p.epsilon);
  double base = 2.0 * phi * A + 8.0 / lambda;
  XYValues v;
  v.Y = base / (std::numbers::e * A1 * p.alpha);
  v.X = (2.0 * std::log(2.0 * A1 / (1.0 - p.omega)) / (1.0 - p.omega)) *
        ((1.0 + p.alpha) / p.alpha) * base;
  return v;
}

JValues compute_J(double lambda, const DensityParams& p) {
  if (!(lambda > 0.0)) throw std::domain_error("compute_J: lambda must be > 0");
  p.validate();
  auto [A1, A] = compute_A1_A(p.alpha, p.eta);
  double phi = compute_phi(p.epsilon);
  XYValues xy = compute_XY(lambda, p);
  JValues j;
  j.k0 = (2.0 * phi * A * lambda + 8.0) / p.alpha;
  double damp = std::exp(-std::min(p.omega * lambda * xy.X, 745.0));
  j.W1 = 8.0 * A1 * (1.0 + 1.0 / j.k0) +
         2.0 * std::numbers::e * A1 * (xy.Y + 0.5 + (2.0 * xy.X + 1.0) * damp);
  j.W2 = (2.0 * std::numbers::e / p.omega) * A1 * damp + 18.0;
  j.lnJ = std::log(j.W1 * lambda + j.W2) - std::log(A1) -
          j.k0 * std::log1p(p.eta);
  j.J = std::exp(j.lnJ);
  return j;
}

Theorem33Result compute_theorem33_bound(double lambda, const DensityParams& p) {
  if (!(lambda > 0.0))
    throw std::domain_error("compute_theorem33_bound: lambda must be > 0");
  p.validate();
  auto [A1, A] = compute_A1_A(p.alpha, p.eta);
  double phi = compute_phi(p.epsilon);

  double l2 = p.xi * lambda;
  XYValues xy = compute_XY(l2, p);
  JValues jv = compute_J(l2, p);

  Theorem33Result r;
  r.X = xy.X;
  r.Y = xy.Y;
  r.J = jv.J;

  double L = std::log(4.0 * std::numbers::e / p.alpha * (1.0 + p.alpha) *
                      std::pow(2.0, (1.0 + p.alpha) / p.alpha));
  r.B1 = 4.0 * phi * A * p.xi * L;
  r.B2 = 16.0 * L;
  double c4den =
      (1.0 - 1.0 / (1.0 + p.upsilon)) * (xy.Y / (1.0 + p.epsilon) - 4.0);
  r.C4 = 5.0 * std::numbers::pi * std::numbers::e * phi * xy.X *
         (xy.X - xy.Y) * (xy.X - xy.Y) * (xy.X + xy.Y + 1.0 + p.epsilon) *
         std::pow(p.xi, 4) / c4den;
  r.C3 = 4.0 * r.C4 / (phi * p.xi);
  r.C1 = 4.0 * phi * A * p.xi;
  r.C0 = 16.0 * A + p.epsilon;

  r.cert.add("J(xi*lambda) < 1", jv.J, "<", 1.0, "thm:LFZD_general hypotheses");
  r.cert.add("X > Y", xy.X, ">", xy.Y, "thm:LFZD_general hypotheses");
  r.cert.add("Y > 4.6", xy.Y, ">", 4.6, "thm:LFZD_general hypotheses");
  r.cert.add("Y/(1+eps) > 4 (C4 denominator)", xy.Y / (1.0 + p.epsilon), ">",
             4.0, "thm:LFZD_general C4");
  r.cert.add_symbolic(
      "lambda range: lambda0 <= lambda < (eps/(xi*A1))*scriptL (lambda0, "
      "scriptL not numeric here)",
      "eqn:LFZD_general_assumptions");

  double poly = ((r.C4 * lambda + r.C3) * lambda * lambda + r.C1) * lambda +
                r.C0;
  double ln_bound = std::log(4.0 * p.xi / std::sqrt(p.xi * p.xi - 1.0)) +
                    std::log(poly) + r.B1 * lambda + r.B2;
  if (jv.J < 1.0) ln_bound -= 2.0 * std::log1p(-jv.J);
  // J >= 1: certificate already failed; report the prefactor-only value
  r.bound = LogValue::from_ln(ln_bound);
  return r;
}

double compute_scriptL(const FieldInvariants& inv) {
  inv.validate();
  double nlogn = inv.n_K * std::log(static_cast<double>(inv.n_K));
  // first branch iff (5 n_K/6) log n_K * n_K >= (4/3) log D_K + (4/9) log Q
  double lhs = (5.0 / 6.0) * nlogn;
  double rhs = (4.0 / 3.0) * inv.log_D_K + (4.0 / 9.0) * inv.log_Q;
  double d0 = inv.delta0;
  if (lhs >= rhs) {
    return (1.0 / 3.0 + d0) * inv.log_D_K + (19.0 / 36.0 + d0) * inv.log_Q +
           (5.0 / 12.0 + d0) * nlogn;
  }
  return (1.0 + d0) * inv.log_D_K + (0.75 + d0) * inv.log_Q + d0 * nlogn;
}

double compute_calL(const FieldInvariants& inv, double Theta) {
  inv.validate();
  if (!(Theta >= 1.0)) throw std::domain_error("compute_calL: Theta must be >= 1");
  return inv.log_D_K + 0.5 * inv.log_Q +
         (inv.n_K / 2.0 + 1.0) * std::log(inv.T + 3.0) + Theta * inv.n_K;
}

double circle_zero_bounds(double r, double t, const FieldInvariants& inv,
                          double log_Nf, bool is_trivial, CircleMode mode,
                          double epsilon) {
  inv.validate();
  if (log_Nf < 0.0) throw std::domain_error("circle_zero_bounds: log_Nf < 0");
  double delta = is_trivial ? 1.0 : 0.0;
  double lt = std::log(std::abs(t) + 3.0);
  if (mode == CircleMode::Classical) {
    if (!(r >= 0.0 && r <= 1.0))
      throw std::domain_error("circle_zero_bounds: classical needs 0 <= r <= 1");
    return (4.0 * inv.log_D_K + 2.0 * log_Nf + 2.0 * inv.n_K * lt + 4.0 +
            4.0 * delta) * r + 4.0 + 4.0 * delta;
  }
  if (!(epsilon > 0.0 && epsilon < 0.25))
    throw std::domain_error("circle_zero_bounds: convexity needs eps in (0,1/4)");
  if (!(r > 0.0 && r < epsilon))
    throw std::domain_error("circle_zero_bounds: convexity needs 0 < r < eps");
  // same closed form as compute_phi, but the convexity lemma admits eps up
  // to 1/4 so evaluate it directly instead of going through the (0,1/8) guard
  double phi = 1.0 + (4.0 / std::numbers::pi) * epsilon +
               16.0 * epsilon * epsilon + 340.0 * std::pow(epsilon, 10);
  return phi * (2.0 * inv.log_D_K + log_Nf + inv.n_K * lt) * r + 4.0 +
         4.0 * delta;
}

}  // namespace cheb
