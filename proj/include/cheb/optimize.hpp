#ifndef CHEB_OPTIMIZE_HPP
#define CHEB_OPTIMIZE_HPP

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "cheb/table.hpp"

namespace cheb {

struct OptimizerConfig {
  // search boxes for (alpha, eta, omega, xi); must sit inside the
  // DensityParams validity intervals
  std::array<double, 2> alpha_bounds = {0.05, 0.60};
  std::array<double, 2> eta_bounds = {0.01, 0.30};
  std::array<double, 2> omega_bounds = {0.005, 0.20};
  std::array<double, 2> xi_bounds = {1.0005, 1.05};
  int multistart = 6;       // 1 = published-row warm start only
  double tol = 1e-7;        // simplex convergence tolerance on the log-bound
  int max_evals = 600;      // per start
  unsigned seed = 12345;

  void validate() const;
  static OptimizerConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Minimize ln(bound) over (alpha, eta, omega, xi) at fixed lambda
// (upsilon = 0.1, eps = 1e-5) by Nelder-Mead multistart warm-started from
// the nearest published row. Infeasible tuples (failing certificate) get
// +inf objective. Throws std::runtime_error if no feasible point is found.
DensityTableRow optimize_row(double lambda, const OptimizerConfig& config);

// One optimized row per published lambda, sorted by lambda. Rows are
// independent; evaluation order never affects the result (fixed per-row
// seeding), so the output is deterministic for a given config.
std::vector<DensityTableRow> reproduce_table(const OptimizerConfig& config);

std::string table_to_csv(const std::vector<DensityTableRow>& rows);
nlohmann::json table_to_json(const std::vector<DensityTableRow>& rows);

}  // namespace cheb

#endif
