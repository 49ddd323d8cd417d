#include "cheb/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cheb {

void OptimizerConfig::validate() const {
  auto box_ok = [](const std::array<double, 2>& b, double lo, double hi) {
    return b[0] < b[1] && b[0] >= lo && b[1] <= hi;
  };
  if (!box_ok(alpha_bounds, 1e-9, 1e9) || !box_ok(eta_bounds, 1e-9, 1e9) ||
      !box_ok(omega_bounds, 1e-9, 1.0 - 1e-12) ||
      !box_ok(xi_bounds, 1.0 + 1e-12, 1e9))
    throw std::domain_error("OptimizerConfig: bounds outside validity intervals");
  if (multistart < 1 || max_evals < 10 || !(tol > 0.0))
    throw std::domain_error("OptimizerConfig: bad multistart/max_evals/tol");
}

OptimizerConfig OptimizerConfig::from_json(const nlohmann::json& j) {
  OptimizerConfig c;
  auto get_box = [&](const char* k, std::array<double, 2>& b) {
    if (j.contains(k)) {
      b[0] = j[k][0].get<double>();
      b[1] = j[k][1].get<double>();
    }
  };
  get_box("alpha_bounds", c.alpha_bounds);
  get_box("eta_bounds", c.eta_bounds);
  get_box("omega_bounds", c.omega_bounds);
  get_box("xi_bounds", c.xi_bounds);
  if (j.contains("multistart")) c.multistart = j["multistart"].get<int>();
  if (j.contains("tol")) c.tol = j["tol"].get<double>();
  if (j.contains("max_evals")) c.max_evals = j["max_evals"].get<int>();
  if (j.contains("seed")) c.seed = j["seed"].get<unsigned>();
  c.validate();
  return c;
}

nlohmann::json OptimizerConfig::to_json() const {
  return {{"alpha_bounds", alpha_bounds}, {"eta_bounds", eta_bounds},
          {"omega_bounds", omega_bounds}, {"xi_bounds", xi_bounds},
          {"multistart", multistart},     {"tol", tol},
          {"max_evals", max_evals},       {"seed", seed}};
}

namespace {

using Vec4 = std::array<double, 4>;  // (alpha, eta, omega, xi)

struct Objective {
  double lambda;
  const OptimizerConfig& cfg;
  mutable long evals = 0;

  bool in_box(const Vec4& x) const {
    return x[0] >= cfg.alpha_bounds[0] && x[0] <= cfg.alpha_bounds[1] &&
           x[1] >= cfg.eta_bounds[0] && x[1] <= cfg.eta_bounds[1] &&
           x[2] >= cfg.omega_bounds[0] && x[2] <= cfg.omega_bounds[1] &&
           x[3] >= cfg.xi_bounds[0] && x[3] <= cfg.xi_bounds[1];
  }

  double operator()(const Vec4& x) const {
    ++evals;
    if (!in_box(x)) return std::numeric_limits<double>::infinity();
    DensityParams p{x[0], x[1], x[2], x[3], 0.1, 1e-5};
    Theorem33Result r = compute_theorem33_bound(lambda, p);
    if (!r.cert.all_pass()) return std::numeric_limits<double>::infinity();
    return r.bound.ln();
  }
};

// standard Nelder-Mead on 4 parameters; returns best vertex found
Vec4 nelder_mead(const Objective& f, Vec4 x0, const Vec4& step, double tol,
                 int max_evals) {
  constexpr int n = 4;
  std::array<Vec4, n + 1> xs;
  std::array<double, n + 1> fs;
  xs[0] = x0;
  fs[0] = f(x0);
  for (int i = 0; i < n; ++i) {
    xs[i + 1] = x0;
    xs[i + 1][i] += step[i];
    fs[i + 1] = f(xs[i + 1]);
  }
  auto order = [&] {
    std::array<int, n + 1> idx;
    for (int i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    std::array<Vec4, n + 1> xs2;
    std::array<double, n + 1> fs2;
    for (int i = 0; i <= n; ++i) {
      xs2[i] = xs[idx[i]];
      fs2[i] = fs[idx[i]];
    }
    xs = xs2;
    fs = fs2;
  };
  order();
  while (f.evals < max_evals) {
    if (std::isfinite(fs[0]) && std::isfinite(fs[n]) && fs[n] - fs[0] < tol)
      break;
    Vec4 c{};  // centroid of all but worst
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c[j] += xs[i][j] / n;
    auto lerp = [&](double t) {
      Vec4 x;
      for (int j = 0; j < n; ++j) x[j] = c[j] + t * (xs[n][j] - c[j]);
      return x;
    };
    Vec4 xr = lerp(-1.0);
    double fr = f(xr);
    if (fr < fs[0]) {
      Vec4 xe = lerp(-2.0);
      double fe = f(xe);
      if (fe < fr) {
        xs[n] = xe;
        fs[n] = fe;
      } else {
        xs[n] = xr;
        fs[n] = fr;
      }
    } else if (fr < fs[n - 1]) {
      xs[n] = xr;
      fs[n] = fr;
    } else {
      Vec4 xc = lerp(fr < fs[n] ? -0.5 : 0.5);
      double fc = f(xc);
      if (fc < std::min(fr, fs[n])) {
        xs[n] = xc;
        fs[n] = fc;
      } else {  // shrink toward best
        for (int i = 1; i <= n; ++i) {
          for (int j = 0; j < n; ++j) xs[i][j] = xs[0][j] + 0.5 * (xs[i][j] - xs[0][j]);
          fs[i] = f(xs[i]);
        }
      }
    }
    order();
  }
  return xs[0];
}

size_t nearest_published(double lambda) {
  const auto& t = published_table();
  size_t best = 0;
  double bd = 1e300;
  for (size_t i = 0; i < t.size(); ++i) {
    double d = std::abs(t[i].lambda - lambda);
    if (d < bd) {
      bd = d;
      best = i;
    }
  }
  return best;
}

double clampd(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

}  // namespace

DensityTableRow optimize_row(double lambda, const OptimizerConfig& config) {
  config.validate();
  if (!(lambda > 0.0)) throw std::domain_error("optimize_row: lambda must be > 0");

  size_t row_idx = nearest_published(lambda);
  const PublishedRow& pr = published_table()[row_idx];
  Vec4 warm = {clampd(pr.alpha, config.alpha_bounds[0], config.alpha_bounds[1]),
               clampd(pr.eta, config.eta_bounds[0], config.eta_bounds[1]),
               clampd(pr.omega, config.omega_bounds[0], config.omega_bounds[1]),
               clampd(pr.xi, config.xi_bounds[0], config.xi_bounds[1])};

  // per-row generator so results do not depend on evaluation order of rows
  std::mt19937 rng(config.seed ^ (static_cast<unsigned>(row_idx) * 0x9e3779b9u));
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  std::array<std::array<double, 2>, 4> boxes = {config.alpha_bounds,
                                                config.eta_bounds,
                                                config.omega_bounds,
                                                config.xi_bounds};
  Vec4 best{};
  double best_f = std::numeric_limits<double>::infinity();
  for (int s = 0; s < config.multistart; ++s) {
    Objective obj{lambda, config};
    Vec4 x0 = warm;
    if (s > 0) {
      for (int j = 0; j < 4; ++j) {
        double w = boxes[j][1] - boxes[j][0];
        x0[j] = clampd(warm[j] + 0.15 * w * u(rng), boxes[j][0], boxes[j][1]);
      }
    }
    Vec4 step;
    for (int j = 0; j < 4; ++j) step[j] = 0.03 * (boxes[j][1] - boxes[j][0]);
    Vec4 xb = nelder_mead(obj, x0, step, config.tol, config.max_evals);
    // candidates: NM result and the raw start, so the warm start's value is
    // always attainable
    for (const Vec4& cand : {xb, x0}) {
      double fc = Objective{lambda, config}(cand);
      if (fc < best_f) {
        best_f = fc;
        best = cand;
      }
    }
  }

  if (!std::isfinite(best_f)) {
    DensityParams p{warm[0], warm[1], warm[2], warm[3], 0.1, 1e-5};
    Theorem33Result r = compute_theorem33_bound(lambda, p);
    std::ostringstream os;
    os << "optimize_row: no feasible point at lambda = " << lambda
       << "; warm-start violations:";
    for (const auto& c : r.cert.failures())
      os << " [" << c.name << ": " << c.lhs << " " << c.relation << " " << c.rhs
         << "]";
    throw std::runtime_error(os.str());
  }

  DensityTableRow row;
  row.lambda = lambda;
  row.params = DensityParams{best[0], best[1], best[2], best[3], 0.1, 1e-5};
  Theorem33Result r = compute_theorem33_bound(lambda, row.params);
  row.J = r.J;
  row.Y = r.Y;
  row.X = r.X;
  row.log_bound = r.bound.ln();
  return row;
}

std::vector<DensityTableRow> reproduce_table(const OptimizerConfig& config) {
  std::vector<DensityTableRow> rows;
  rows.reserve(published_table().size());
  for (const auto& pr : published_table())
    rows.push_back(optimize_row(pr.lambda, config));
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return rows;
}

std::string table_to_csv(const std::vector<DensityTableRow>& rows) {
  std::string out = "lambda,log_bound,alpha,eta,omega,xi,J,Y,X\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf),
                  "%.3f,%.4f,%.6f,%.6f,%.6f,%.6f,%.4f,%.4f,%.2f\n", r.lambda,
                  r.log_bound, r.params.alpha, r.params.eta, r.params.omega,
                  r.params.xi, r.J, r.Y, r.X);
    out += buf;
  }
  return out;
}

nlohmann::json table_to_json(const std::vector<DensityTableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"lambda", r.lambda},
                   {"log_bound", r.log_bound},
                   {"alpha", r.params.alpha},
                   {"eta", r.params.eta},
                   {"omega", r.params.omega},
                   {"xi", r.params.xi},
                   {"J", r.J},
                   {"Y", r.Y},
                   {"X", r.X}});
  }
  return arr;
}

}  // namespace cheb
