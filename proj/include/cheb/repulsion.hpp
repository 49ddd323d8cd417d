#ifndef CHEB_REPULSION_HPP
#define CHEB_REPULSION_HPP

#include <complex>
#include <vector>

#include <json.hpp>

#include "cheb/certificate.hpp"
#include "cheb/params.hpp"

namespace cheb {

enum class PsiKind { Quadratic, Trivial };

struct RepulsionInputs {
  FieldInvariants inv;
  PsiKind psi_kind = PsiKind::Quadratic;
  double alpha = 18.0;    // >= 1
  double epsilon = 1e-4;  // > 0
  double lambda1 = 1e-3;  // > 0, exceptional-zero distance in scriptL units
};

// The (alpha+1/2)^2/alpha^2 * [ ... ] display bounding M/alpha, for the
// quadratic-psi or trivial-psi case.
double dh_M_over_alpha(const RepulsionInputs& in, double t_abs);

struct DHTuple {
  double b1, b2, b3;   // coefficients of log D_K, log Q, n_K log T
  double alpha_star;   // smallest alpha meeting all three targets
  double alpha18_b1, alpha18_b2, alpha18_b3;  // spot values at alpha = 18
};

// Smallest alpha >= 1 (bisection) such that the M/alpha coefficients of
// log D_K, log Q, and n_K log T all meet their targets
// (2+eps/100, 2.5+eps/100, 1+eps/100) for quadratic psi, or
// (1+eps/50, 0.5+eps/50, 0.5+eps/50) for trivial psi; returns
// b_i = (24+2eps) * coefficient_i, approaching (48,60,24) / (24,12,12).
DHTuple dh_coefficient_tuple(PsiKind psi_kind, double epsilon);

enum class RepulsionRegime { WideRange, Classical, Unconditional };

// Lower bound on min{lambda', lambda_2}: 0.44 (unconditional),
// 0.2103 log(1/lambda1) (classical), (1/(80+eps)) log(c_eps/lambda1)
// (wide-range, c_eps caller-supplied; unspecified at source, default 1).
double repulsion_radius(double lambda1, RepulsionRegime regime,
                        double epsilon = 1e-4, double c_eps = 1.0);

struct PowerSumInstance {
  std::vector<std::complex<double>> z;  // |z[0]| must be the max modulus
  int M = 0;                            // shift for the KS variant
};

struct KSResult {
  int k_star;
  double ratio;
  bool pass;
};

// Scan k in [M+1, M+N] for |sum z_n^k| >= 1.007 (N/(4e(M+N)))^N |z1|^k;
// returns the maximizing k and its ratio.
KSResult verify_ks_powersum(const PowerSumInstance& inst);

struct LMOResult {
  int m0;
  bool pass;
};

// Scan m0 in [1, ceil((12+eps)M)], M = sum|z_n|/|z1|, for
// Re sum z_n^{m0} >= (eps/(48+5eps)) |z1|^{m0}.
LMOResult verify_lmo_powersum(const PowerSumInstance& inst, double epsilon);

struct CampaignResult {
  long instances;
  long passes;
  unsigned seed;
  bool all_pass() const { return passes == instances; }
  nlohmann::json to_json(const char* which) const;
};

// Random campaigns: moduli uniform in [0,1], phases uniform, sorted so the
// first entry has max modulus. Any failure indicates an implementation bug
// (the underlying inequalities are theorems).
CampaignResult ks_campaign(long instances, unsigned seed);
CampaignResult lmo_campaign(long instances, unsigned seed, double epsilon = 0.05);

}  // namespace cheb

#endif
