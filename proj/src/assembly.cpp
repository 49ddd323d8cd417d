#include "cheb/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include "cheb/table.hpp"

namespace cheb {

double CaseAnalysisInputs::B_prime() const {
  if (scriptL && *scriptL > 0.0)
    return B - 8.0 * std::floor(eta * *scriptL) / *scriptL;
  return B - 8.0 * eta;
}

nlohmann::json NonexceptionalResult::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : z1_terms)
    terms.push_back({{"Lambda_prev", t.Lambda_prev},
                     {"Lambda_j", t.Lambda_j},
                     {"ln_N", t.lnN},
                     {"contribution", t.contribution}});
  return {{"S_lower", S_lower},
          {"Z1", Z1},
          {"ln_Z2", Z2.ln()},
          {"z1_terms", terms},
          {"certificate", cert.to_json()}};
}

NonexceptionalResult nonexceptional_margin(const CaseAnalysisInputs& in) {
  if (!(in.lambda1 >= 0.0875))
    throw std::domain_error("nonexceptional_margin: requires lambda1 >= 0.0875");
  if (!(in.B >= 693.5))
    throw std::domain_error("nonexceptional_margin: requires B >= 693.5");
  if (!(in.eta > 0.0 && in.eta <= 1e-3))
    throw std::domain_error("nonexceptional_margin: requires eta in (0, 1e-3]");

  double Bp = in.B_prime();
  // lambda* = 0.2866, then the published grid:
  // 0.286+0.001r (r=1..14), 0.300+0.025(r-14) (r=15..22), 0.5+0.05(r-22) (r=23..32)
  std::vector<double> Lam(33);
  Lam[0] = 0.2866;
  for (int r = 1; r <= 14; ++r) Lam[r] = 0.286 + 0.001 * r;
  for (int r = 15; r <= 22; ++r) Lam[r] = 0.300 + 0.025 * (r - 14);
  for (int r = 23; r <= 32; ++r) Lam[r] = 0.5 + 0.05 * (r - 22);

  NonexceptionalResult out;
  double Z1 = 0.0;
  for (int j = 1; j <= 31; ++j) {
    double lnN = N_envelope(Lam[j]).ln();
    // (e^{-B'L_{j-1}} - e^{-B'L_j}) N(L_j), assembled in the log domain
    double c = std::exp(-Bp * Lam[j - 1] + lnN) *
               (-std::expm1(-Bp * (Lam[j] - Lam[j - 1])));
    Z1 += c;
    out.z1_terms.push_back({Lam[j - 1], Lam[j], lnN, c});
  }
  double lnN32 = N_envelope(Lam[32]).ln();
  double boundary = std::exp(-Bp * Lam[31] + lnN32);
  Z1 += boundary;
  out.z1_terms.push_back({Lam[31], Lam[32], lnN32, boundary});
  out.Z1 = Z1;

  // Z2 closed form with R -> infinity (only strengthens the bound):
  // B' e^{188 - (B'-162)} / (B'-162)
  out.Z2 = LogValue::from_ln(std::log(Bp / (Bp - 162.0)) + 188.0 - (Bp - 162.0));

  out.S_lower = 1.0 - 2.0 * std::exp(-Bp * in.lambda1) - Z1 - out.Z2.value() -
                2.0 * in.eta;

  out.cert.add("B' > 162", Bp, ">", 162.0, "sec. 10");
  out.cert.add("Z1 <= 0.9926", Z1, "<=", 0.9926, "sec. 10");
  out.cert.add("ln Z2 <= -400 ln 10", out.Z2.ln(), "<=", -400.0 * std::log(10.0),
               "sec. 10");
  out.cert.add("S_lower >= 0.0073 - 2 eta", out.S_lower, ">=",
               0.0073 - 2.0 * in.eta, "sec. 10");
  out.cert.add_symbolic("scriptL sufficiently large (depending on eta)",
                        "sec. 10");
  return out;
}

nlohmann::json ExceptionalResult::to_json() const {
  return {{"case", case_label},
          {"margin", margin},
          {"margin_without_O_terms", margin_without_O},
          {"lambda_star", lambda_star},
          {"certificate", cert.to_json()}};
}

ExceptionalResult exceptional_margin(const CaseAnalysisInputs& in) {
  if (!(in.lambda1 > 0.0 && in.lambda1 < 0.0875))
    throw std::domain_error("exceptional_margin: requires 0 < lambda1 < 0.0875");
  if (!(in.eta > 0.0 && in.eta <= 1e-3))
    throw std::domain_error("exceptional_margin: requires eta in (0, 1e-3]");

  ExceptionalResult out;
  out.lambda_star = 0.0;

  if (in.lambda1 >= 1e-3) {
    // medium: evaluated at the subcase floors B' = 592, lambda1 = 1e-3 (the
    // worst case over the whole subcase), as in the source derivation
    if (!(in.B >= 593.0))
      throw std::domain_error("exceptional_margin (medium): requires B >= 593");
    out.case_label = "medium";
    out.lambda_star = 0.44;
    double m = 1.0 - std::exp(-592.0 * 1e-3) -
               (592.0 / 430.0) * std::exp(-430.0 * 0.44 + 188.0) - 2.0 * in.eta;
    out.margin = m;
    out.margin_without_O = m;  // no O-terms in this subcase
    out.cert.add("margin >= 0.032 - 2 eta", m, ">=", 0.032 - 2.0 * in.eta,
                 "sec. 9.1.1");
  } else if (in.lambda1 >= in.eta) {
    // small
    if (!(in.B >= 297.0))
      throw std::domain_error("exceptional_margin (small): requires B >= 297");
    out.case_label = "small";
    double l1 = in.lambda1;
    out.lambda_star = 0.2103 * std::log(1.0 / l1);
    double m = 296.5 * l1 - 0.5 * 296.5 * 296.5 * l1 * l1 -
               (296.0 / 134.0) * l1 - 2.0 * in.eta;
    out.margin = m;
    out.margin_without_O = m;
    out.cert.add("lambda* > 1.45", out.lambda_star, ">", 1.45, "sec. 9.1.2");
    out.cert.add("exponent check 4.84 * 0.2103 > 1", 4.84 * 0.2103, ">", 1.0,
                 "sec. 9.1.2");
    out.cert.add("margin >= 250 eta", m, ">=", 250.0 * in.eta, "sec. 9.1.2");
  } else if (in.chi1_sign == -1) {
    // very small, chi1(C) = -1
    if (!(in.B >= 163.0))
      throw std::domain_error(
          "exceptional_margin (very-small, chi = -1): requires B >= 163");
    out.case_label = "very-small-chi-minus";
    double l1 = in.lambda1;
    out.lambda_star = std::log(in.c1 / l1) / 81.0;
    double base = 1.0 + std::exp(-162.5 * l1) - 2.0 * in.eta;
    // the 325 e^{188 - 0.5 lambda*} term equals 325 e^{188} (l1/c1)^{1/162};
    // with the default c1 = 1 this is astronomically large unless lambda1 is
    // tiny, which the certificate makes explicit
    double oterm = std::exp(std::log(325.0) + 188.0 - 0.5 * out.lambda_star);
    out.margin = base - oterm;
    out.margin_without_O = base;
    out.cert.add("margin (without O-terms) >= 2 - 2 eta - 162.5 lambda1",
                 out.margin_without_O, ">=", 2.0 - 2.0 * in.eta - 162.5 * l1,
                 "sec. 9.1.3");
    out.cert.add_symbolic(
        "O-term depends on the unspecified absolute constant c1 (default 1)",
        "sec. 9.1.3");
  } else if (in.chi1_sign == +1) {
    // truly exceptional, chi1(C) = +1
    if (!(in.B >= 243.0))
      throw std::domain_error(
          "exceptional_margin (truly-exceptional): requires B >= 243");
    out.case_label = "truly-exceptional";
    double l1 = in.lambda1;
    double base = 242.2 * l1 - 0.5 * 242.2 * 242.2 * l1 * l1;
    double oterm = in.C_impl * std::pow(l1, 80.2 / 80.1);
    if (in.scriptL) oterm += in.C_impl * std::exp(-78.0 * *in.scriptL);
    out.margin = base - oterm;
    out.margin_without_O = base;
    out.cert.add("margin >= 0 (with default implied constants)", out.margin,
                 ">=", 0.0, "sec. 9.2");
    out.cert.add_symbolic(
        "O(lambda1^{80.2/80.1} + e^{-78 scriptL}) carried with caller C_impl "
        "(default 1)",
        "sec. 9.2");
    if (!in.scriptL)
      out.cert.add_symbolic("e^{-78 scriptL} term omitted: scriptL not supplied",
                            "sec. 9.2");
  } else {
    throw std::domain_error(
        "exceptional_margin: lambda1 < eta requires chi1_sign = +1 or -1");
  }
  return out;
}

std::array<long, 5> derive_main_exponents(double B, double delta0) {
  if (!(B >= 0.0) || !(delta0 > 0.0))
    throw std::domain_error("derive_main_exponents: need B >= 0, delta0 > 0");
  auto e = [&](double f) {
    return static_cast<long>(std::ceil(B * (f + delta0)));
  };
  return {e(1.0), e(3.0 / 4.0), e(1.0 / 3.0), e(19.0 / 36.0), e(5.0 / 12.0)};
}

ValidityCertificate reduce_conditions(const FieldInvariants& inv, double eta) {
  inv.validate();
  if (!(eta > 0.0 && eta <= 1e-3))
    throw std::domain_error("reduce_conditions: requires eta in (0, 1e-3]");
  ValidityCertificate cert;
  double sL = compute_scriptL(inv);
  cert.add("scriptL > 0", sL, ">", 0.0, "def:sL");
  double B_min = std::max(693.5, sL > 0.0 ? inv.log_Nm / sL + 8.0 * eta : 1e300);
  double A = sL > 0.0 ? 4.0 / sL : std::numeric_limits<double>::infinity();
  double ell = sL > 0.0 ? std::floor(eta * sL) : 0.0;
  double Bp = B_min - 2.0 * ell * A;
  cert.add("B' > 162", Bp, ">", 162.0, "lem:LowLyingZeros hypotheses");
  if (sL > 0.0)
    cert.add("B' > log Nm / scriptL", Bp, ">", inv.log_Nm / sL,
             "lem:LowLyingZeros hypotheses");
  cert.add("ell > (81 n_K + 162)/4", ell, ">", (81.0 * inv.n_K + 162.0) / 4.0,
           "lem:Height1 hypotheses");
  cert.add_symbolic("scriptL sufficiently large", "lem:ReduceMainTheorem");
  return cert;
}

}  // namespace cheb
