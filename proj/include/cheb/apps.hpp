#ifndef CHEB_APPS_HPP
#define CHEB_APPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cheb/certificate.hpp"
#include "cheb/log_value.hpp"
#include "cheb/params.hpp"

namespace cheb {

struct ExtensionData {
  long LK = 1;            // [L:K] >= 1
  long n_L = 1;
  int omega_DL = 0;       // number of distinct prime factors of D_L
  double log_rad_DL = 0;  // log rad(D_L)
};

struct ChebotarevInstance {
  FieldInvariants inv;
  std::optional<ExtensionData> ext;
};

struct BoundReport {
  LogValue bound;
  std::string formula_name;
  ValidityCertificate cert;
  std::vector<std::pair<std::string, LogValue>> comparisons;
  nlohmann::json to_json() const;
  std::string render() const;  // ln always; decimal too when < 1e300
};

// ln of D_K^694 Q^521 + D_K^232 Q^367 n_K^{290 n_K} (log-sum-exp); the
// implied constant is symbolic (default 1).
BoundReport chebotarev_bound(const ChebotarevInstance& inst);

// ln bound = 3 ln n_L - 694 log rad(D_L)
//            + n_K (1042 ln[L:K] + 694 omega(D_L) ln n_K + 1736 log rad(D_L));
// requires extension data and n_K >= 2.
BoundReport generic_v2_bound(const ChebotarevInstance& inst);

// ln bound = 694 ln|D|, |D| >= 3.
BoundReport quadratic_form_bound(long long abs_D);

// ln bound = (5209 + 1389 omega) l^2 ln l + 1895 l^2 log rad(N), l >= 11 prime.
BoundReport elliptic_curve_bound(long ell, int omega_N, double log_rad_N);

// ln bound = (4515 + 695 omega) l ln l + (1736 l + 1042) log rad(N), l >= 3 prime.
BoundReport modular_form_bound(long ell, int omega_N, double log_rad_N);

// (name, LogValue) comparison entries: Bach-Sorenson GRH
// (4 log D_L + 2.5 n_L + 5)^2, the unconditional D_L^40, and optionally
// (phi(q) log q)^2 for abelian-over-Q inputs.
std::vector<std::pair<std::string, LogValue>> grh_comparisons(
    double log_D_L, long n_L, std::optional<std::uint64_t> q = std::nullopt);

// Trial-division helper for callers who hold N rather than its invariants.
struct Factorization {
  int omega = 0;            // distinct prime factors
  double log_rad = 0.0;     // log of the radical
  std::uint64_t euler_phi = 1;
};
Factorization factor_invariants(std::uint64_t N);

bool is_prime_u64(std::uint64_t n);

}  // namespace cheb

#endif
