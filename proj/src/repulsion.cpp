#include "cheb/repulsion.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace cheb {

namespace {

// bracket coefficients of [log D_K, log Q, n_K (constant part), n_K log T,
// tail] before the (alpha+1/2)^2/alpha^2 prefactor
struct MCoeffs {
  double c_dk, c_q, c_nk, c_nkt, tail;
};

MCoeffs m_coeffs(PsiKind kind, double a) {
  double p2 = std::pow(2.0, a + 1.0) - 1.0;
  double ap1 = a + 1.0;
  MCoeffs c;
  if (kind == PsiKind::Quadratic) {
    c.c_dk = 2.0;
    c.c_q = 1.5 + (2.0 * a) / (2.0 * a + 2.0) +
            (4.0 * a) / (ap1 * ap1 * std::numbers::ln2) + 2.0 / p2;
    c.c_nk = std::log(a + 2.0) + std::log(a + 3.0) + 2.0 -
             2.0 * std::log(std::numbers::pi) + (4.0 * a) / (ap1 * ap1) +
             1.0 / p2;
    c.c_nkt = 1.0;
    c.tail = 4.0 / a + 4.0 / ap1;
  } else {
    c.c_dk = 1.0;
    c.c_q = 0.5 + 1.0 / p2;
    c.c_nk = 0.5 * std::log(a + 2.0) + 0.5 * std::log(a + 3.0) + 1.0 -
             std::log(std::numbers::pi) + (2.0 * a) / (ap1 * ap1) + 0.5 / p2;
    c.c_nkt = 0.5;
    c.tail = 2.0 / a + 2.0 / ap1;
  }
  return c;
}

double prefactor(double a) {
  double q = (a + 0.5) / a;
  return q * q;
}

}  // namespace

double dh_M_over_alpha(const RepulsionInputs& in, double t_abs) {
  in.inv.validate();
  if (!(in.alpha >= 1.0))
    throw std::domain_error("dh_M_over_alpha: alpha must be >= 1");
  if (t_abs < 0.0 || t_abs > in.inv.T)
    throw std::domain_error("dh_M_over_alpha: need 0 <= |t| <= T");
  MCoeffs c = m_coeffs(in.psi_kind, in.alpha);
  double logT = std::log(in.inv.T);
  double bracket = c.c_dk * in.inv.log_D_K + c.c_q * in.inv.log_Q +
                   c.c_nk * in.inv.n_K + c.c_nkt * in.inv.n_K * logT + c.tail;
  return prefactor(in.alpha) * bracket;
}

DHTuple dh_coefficient_tuple(PsiKind psi_kind, double epsilon) {
  if (!(epsilon > 0.0))
    throw std::domain_error("dh_coefficient_tuple: epsilon must be > 0");
  double t_dk, t_q, t_nkt;
  if (psi_kind == PsiKind::Quadratic) {
    t_dk = 2.0 + epsilon / 100.0;
    t_q = 2.5 + epsilon / 100.0;
    t_nkt = 1.0 + epsilon / 100.0;
  } else {
    t_dk = 1.0 + epsilon / 50.0;
    t_q = 0.5 + epsilon / 50.0;
    t_nkt = 0.5 + epsilon / 50.0;
  }
  // every coefficient is strictly decreasing in alpha, so "all targets met"
  // is a monotone predicate and bisection applies
  auto meets = [&](double a) {
    MCoeffs c = m_coeffs(psi_kind, a);
    double p = prefactor(a);
    return p * c.c_dk <= t_dk && p * c.c_q <= t_q && p * c.c_nkt <= t_nkt;
  };
  const double CAP = 1e9;
  if (!meets(CAP))
    throw std::runtime_error(
        "dh_coefficient_tuple: no admissible alpha below cap 1e9");
  double lo = 1.0, hi = CAP;
  if (meets(lo)) {
    hi = lo;
  } else {
    while (hi - lo > 1e-6 * std::max(1.0, lo)) {
      double mid = 0.5 * (lo + hi);
      (meets(mid) ? hi : lo) = mid;
    }
  }
  double a_star = hi;
  MCoeffs c = m_coeffs(psi_kind, a_star);
  double p = prefactor(a_star);
  double agg = 24.0 + 2.0 * epsilon;
  DHTuple out;
  out.alpha_star = a_star;
  out.b1 = agg * p * c.c_dk;
  out.b2 = agg * p * c.c_q;
  out.b3 = agg * p * c.c_nkt;
  MCoeffs c18 = m_coeffs(psi_kind, 18.0);
  double p18 = prefactor(18.0);
  out.alpha18_b1 = agg * p18 * c18.c_dk;
  out.alpha18_b2 = agg * p18 * c18.c_q;
  out.alpha18_b3 = agg * p18 * c18.c_nkt;
  return out;
}

double repulsion_radius(double lambda1, RepulsionRegime regime, double epsilon,
                        double c_eps) {
  if (!(lambda1 > 0.0))
    throw std::domain_error("repulsion_radius: lambda1 must be > 0");
  switch (regime) {
    case RepulsionRegime::Unconditional:
      if (!(lambda1 < 0.0875))
        throw std::domain_error("repulsion_radius: unconditional needs lambda1 < 0.0875");
      return 0.44;
    case RepulsionRegime::Classical:
      if (!(lambda1 < 0.0875))
        throw std::domain_error("repulsion_radius: classical needs lambda1 < 0.0875");
      return 0.2103 * std::log(1.0 / lambda1);
    case RepulsionRegime::WideRange:
      if (!(epsilon > 0.0))
        throw std::domain_error("repulsion_radius: epsilon must be > 0");
      return std::log(c_eps / lambda1) / (80.0 + epsilon);
  }
  throw std::domain_error("repulsion_radius: unknown regime");
}

KSResult verify_ks_powersum(const PowerSumInstance& inst) {
  const auto& z = inst.z;
  if (z.empty()) throw std::domain_error("verify_ks_powersum: empty instance");
  if (inst.M < 0) throw std::domain_error("verify_ks_powersum: M < 0");
  int N = static_cast<int>(z.size());
  double z1 = std::abs(z[0]);
  double cN = 1.007 * std::pow(N / (4.0 * std::numbers::e * (inst.M + N)), N);
  KSResult best{inst.M + 1, -1.0, false};
  for (int k = inst.M + 1; k <= inst.M + N; ++k) {
    std::complex<double> s = 0.0;
    for (const auto& w : z) s += std::pow(w, k);
    double denom = cN * std::pow(z1, k);
    double ratio = denom > 0.0 ? std::abs(s) / denom
                               : std::numeric_limits<double>::infinity();
    if (ratio > best.ratio) {
      best.ratio = ratio;
      best.k_star = k;
    }
  }
  best.pass = best.ratio >= 1.0;
  return best;
}

LMOResult verify_lmo_powersum(const PowerSumInstance& inst, double epsilon) {
  const auto& z = inst.z;
  if (z.empty()) throw std::domain_error("verify_lmo_powersum: empty instance");
  if (!(epsilon > 0.0))
    throw std::domain_error("verify_lmo_powersum: epsilon must be > 0");
  double z1 = std::abs(z[0]);
  double sum_abs = 0.0;
  for (const auto& w : z) {
    if (std::abs(w) > z1 * (1.0 + 1e-15))
      throw std::domain_error("verify_lmo_powersum: |z_n| <= |z_1| violated");
    sum_abs += std::abs(w);
  }
  if (z1 == 0.0) throw std::domain_error("verify_lmo_powersum: z1 = 0");
  double M = sum_abs / z1;
  int m_max = static_cast<int>(std::ceil((12.0 + epsilon) * M));
  double thr = epsilon / (48.0 + 5.0 * epsilon);
  for (int m0 = 1; m0 <= m_max; ++m0) {
    std::complex<double> s = 0.0;
    for (const auto& w : z) s += std::pow(w, m0);
    if (s.real() >= thr * std::pow(z1, m0)) return {m0, true};
  }
  return {m_max, false};
}

nlohmann::json CampaignResult::to_json(const char* which) const {
  return {{"campaign", which},
          {"instances", instances},
          {"passes", passes},
          {"seed", seed},
          {"pass_rate", instances ? double(passes) / instances : 0.0},
          {"all_pass", all_pass()}};
}

namespace {

std::vector<std::complex<double>> random_instance(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> um(0.0, 1.0);
  std::uniform_real_distribution<double> up(0.0, 2.0 * std::numbers::pi);
  std::vector<std::complex<double>> z;
  z.reserve(n);
  for (int i = 0; i < n; ++i)
    z.push_back(std::polar(um(rng), up(rng)));
  std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
    return std::abs(a) > std::abs(b);
  });
  return z;
}

}  // namespace

CampaignResult ks_campaign(long instances, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> un(1, 8), uM(0, 4);
  CampaignResult r{0, 0, seed};
  while (r.instances < instances) {
    PowerSumInstance inst;
    inst.z = random_instance(rng, un(rng));
    inst.M = uM(rng);
    if (std::abs(inst.z[0]) == 0.0) continue;
    ++r.instances;
    if (verify_ks_powersum(inst).pass) ++r.passes;
  }
  return r;
}

CampaignResult lmo_campaign(long instances, unsigned seed, double epsilon) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> un(1, 12);
  CampaignResult r{0, 0, seed};
  while (r.instances < instances) {
    PowerSumInstance inst;
    inst.z = random_instance(rng, un(rng));
    if (std::abs(inst.z[0]) == 0.0) continue;
    ++r.instances;
    if (verify_lmo_powersum(inst, epsilon).pass) ++r.passes;
  }
  return r;
}

}  // namespace cheb
