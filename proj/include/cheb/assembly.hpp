#ifndef CHEB_ASSEMBLY_HPP
#define CHEB_ASSEMBLY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cheb/certificate.hpp"
#include "cheb/log_value.hpp"
#include "cheb/params.hpp"

namespace cheb {

struct CaseAnalysisInputs {
  double B = 693.5;
  double eta = 1e-3;                 // in (0, 1e-3]
  double lambda1 = 0.0875;           // > 0
  int chi1_sign = 0;                 // +1, -1, or 0 for unknown
  std::optional<double> scriptL;     // if set, B' = B - 8*floor(eta*sL)/sL
  double c1 = 1.0;                   // unspecified absolute constant, default 1
  double C_impl = 1.0;               // implied constant for O-terms, default 1

  // B' = B - 2*l*A with l = floor(eta*sL), A = 4/sL; without sL we use the
  // worst case B - 8*eta (B' always lies in [B-8eta, B])
  double B_prime() const;
};

struct Z1Term {
  double Lambda_prev, Lambda_j;   // subinterval endpoints
  double lnN;                     // ln N_envelope(Lambda_j)
  double contribution;
};

struct NonexceptionalResult {
  double S_lower;
  double Z1;
  LogValue Z2;
  std::vector<Z1Term> z1_terms;   // full grid audit, incl. the boundary term
  ValidityCertificate cert;
  nlohmann::json to_json() const;
};

// Section-10 partial summation: lambda* = 0.2866, Lambda = 1, M = 32 with the
// published grid; Z1 = e^{-B'L_31} N(L_32) + sum_j (e^{-B'L_{j-1}} - e^{-B'L_j}) N(L_j),
// Z2 = B' e^{188-(B'-162)}/(B'-162) (the R -> infinity limit, in log domain),
// S_lower = 1 - 2 e^{-B' lambda1} - Z1 - Z2 - 2 eta.
NonexceptionalResult nonexceptional_margin(const CaseAnalysisInputs& in);

struct ExceptionalResult {
  std::string case_label;
  double margin;            // with caller-parameterized O-terms included
  double margin_without_O;  // O-terms dropped
  double lambda_star;       // repulsion radius used (0 if not applicable)
  ValidityCertificate cert;
  nlohmann::json to_json() const;
};

// Section-9 subcase dispatch on (lambda1 range, chi1 sign); requires
// lambda1 < 0.0875. Each subcase has its own B floor (593 / 297 / 163 / 243);
// violating it is a domain error naming the requirement.
ExceptionalResult exceptional_margin(const CaseAnalysisInputs& in);

// x-range exponents induced by x = e^{B sL} under each sL branch:
// ceil(B(1+d)), ceil(B(3/4+d)), ceil(B(1/3+d)), ceil(B(19/36+d)), ceil(B(5/12+d)).
std::array<long, 5> derive_main_exponents(double B, double delta0);

// Checks the B/A/ell wiring: B_min = max(693.5, log Nm/sL + 8 eta), A = 4/sL,
// ell = floor(eta sL); records B' > max(162, log Nm/sL) and
// ell > (81 n_K + 162)/4.
ValidityCertificate reduce_conditions(const FieldInvariants& inv, double eta);

}  // namespace cheb

#endif
