#include "cheb/apps.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cheb {

nlohmann::json BoundReport::to_json() const {
  nlohmann::json cmp = nlohmann::json::array();
  for (const auto& [name, v] : comparisons)
    cmp.push_back({{"name", name}, {"ln_value", v.ln()}});
  nlohmann::json j = {{"formula", formula_name},
                      {"ln_bound", bound.ln()},
                      {"implied_constant", "xC_impl (unspecified)"},
                      {"comparisons", cmp},
                      {"certificate", cert.to_json()}};
  if (bound.ln() < 300.0 * std::log(10.0)) j["bound"] = bound.value();
  return j;
}

std::string BoundReport::render() const {
  std::ostringstream os;
  os.precision(10);
  os << formula_name << ": ln(bound) = " << bound.ln();
  if (bound.ln() < 300.0 * std::log(10.0)) os << "  (= " << bound.value() << ")";
  os << "  xC_impl (unspecified)\n";
  for (const auto& [name, v] : comparisons) {
    os << "  vs " << name << ": ln = " << v.ln();
    if (v.ln() < 300.0 * std::log(10.0)) os << "  (= " << v.value() << ")";
    os << "\n";
  }
  for (const auto& c : cert.checks()) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (c.relation != "symbolic")
      os << ": " << c.lhs << " " << c.relation << " " << c.rhs;
    os << "\n";
  }
  return os.str();
}

static BoundReport chebotarevBoundImpl(const FieldInvariants& inv) {
  BoundReport r;
  r.formula_name = "least-prime-in-Chebotarev bound";
  double t1 = 694.0 * inv.log_D_K + 521.0 * inv.log_Q;
  double t2 = 232.0 * inv.log_D_K + 367.0 * inv.log_Q +
              290.0 * inv.n_K * std::log(static_cast<double>(inv.n_K));
  r.bound = LogValue::from_ln(t1) + LogValue::from_ln(t2);
  r.cert.add_symbolic("D_K, Q, n_K^{n_K} sufficiently large",
                      "thm:main_theorem hypotheses");
  return r;
}

BoundReport chebotarev_bound(const ChebotarevInstance& inst) {
  inst.inv.validate();
  BoundReport r = chebotarevBoundImpl(inst.inv);
  if (inst.ext) {
    auto cmp = grh_comparisons(inst.ext->log_rad_DL + inst.inv.log_D_K,
                               inst.ext->n_L);
    r.comparisons.insert(r.comparisons.end(), cmp.begin(), cmp.end());
  }
  return r;
}

BoundReport generic_v2_bound(const ChebotarevInstance& inst) {
  inst.inv.validate();
  if (!inst.ext)
    throw std::domain_error("generic_v2_bound: extension data required");
  if (inst.inv.n_K < 2)
    throw std::domain_error("generic_v2_bound: requires K != Q (n_K >= 2)");
  const ExtensionData& e = *inst.ext;
  if (e.LK < 1 || e.n_L < 1 || e.omega_DL < 0 || e.log_rad_DL < 0.0)
    throw std::domain_error("generic_v2_bound: bad extension data");
  BoundReport r;
  r.formula_name = "generic tower bound";
  double ln = 3.0 * std::log(static_cast<double>(e.n_L)) -
              694.0 * e.log_rad_DL +
              inst.inv.n_K * (1042.0 * std::log(static_cast<double>(e.LK)) +
                              694.0 * e.omega_DL *
                                  std::log(static_cast<double>(inst.inv.n_K)) +
                              1736.0 * e.log_rad_DL);
  r.bound = LogValue::from_ln(ln);
  r.cert.add("n_K >= 2", inst.inv.n_K, ">=", 2.0, "thm:main_theorem_v2");
  r.cert.add_symbolic("invariants sufficiently large",
                      "thm:main_theorem_v2 hypotheses");
  return r;
}

BoundReport quadratic_form_bound(long long abs_D) {
  if (abs_D < 3)
    throw std::domain_error("quadratic_form_bound: requires |D| >= 3");
  BoundReport r;
  r.formula_name = "least prime represented by a binary quadratic form";
  r.bound = LogValue::from_ln(694.0 * std::log(static_cast<double>(abs_D)));
  r.cert.add_symbolic("D_K * Q <= |D| for the associated field",
                      "thm:least_prime_QF proof");
  return r;
}

BoundReport elliptic_curve_bound(long ell, int omega_N, double log_rad_N) {
  if (ell < 11 || !is_prime_u64(static_cast<std::uint64_t>(ell)))
    throw std::domain_error("elliptic_curve_bound: ell must be a prime >= 11");
  if (omega_N < 0 || log_rad_N < 0.0)
    throw std::domain_error("elliptic_curve_bound: bad conductor invariants");
  BoundReport r;
  r.formula_name = "least prime with ell | #E(F_p)";
  double l2 = static_cast<double>(ell) * ell;
  r.bound = LogValue::from_ln((5209.0 + 1389.0 * omega_N) * l2 * std::log((double)ell) +
                              1895.0 * l2 * log_rad_N);
  double l4 = l2 * l2;
  r.comparisons.emplace_back(
      "LMO-style ell^{200 l^4} rad(N)^{40 l^4}",
      LogValue::from_ln(200.0 * l4 * std::log((double)ell) + 40.0 * l4 * log_rad_N));
  return r;
}

BoundReport modular_form_bound(long ell, int omega_N, double log_rad_N) {
  if (ell < 3 || !is_prime_u64(static_cast<std::uint64_t>(ell)))
    throw std::domain_error("modular_form_bound: ell must be a prime >= 3");
  if (omega_N < 0 || log_rad_N < 0.0)
    throw std::domain_error("modular_form_bound: bad level invariants");
  BoundReport r;
  r.formula_name = "least prime with ell not dividing a_p";
  double l = static_cast<double>(ell);
  r.bound = LogValue::from_ln((4515.0 + 695.0 * omega_N) * l * std::log(l) +
                              (1736.0 * l + 1042.0) * log_rad_N);
  r.cert.add_symbolic("mod-ell Galois representation assumed surjective",
                      "thm:MF_Fourier hypotheses");
  return r;
}

std::vector<std::pair<std::string, LogValue>> grh_comparisons(
    double log_D_L, long n_L, std::optional<std::uint64_t> q) {
  if (log_D_L < 0.0 || n_L < 1)
    throw std::domain_error("grh_comparisons: bad inputs");
  std::vector<std::pair<std::string, LogValue>> out;
  double bs = 4.0 * log_D_L + 2.5 * n_L + 5.0;
  out.emplace_back("Bach-Sorenson GRH (4 log D_L + 2.5 n_L + 5)^2",
                   LogValue::from_ln(2.0 * std::log(bs)));
  out.emplace_back("LMO unconditional D_L^40",
                   LogValue::from_ln(40.0 * log_D_L));
  if (q && *q >= 4) {
    Factorization f = factor_invariants(*q);
    double v = static_cast<double>(f.euler_phi) * std::log((double)*q);
    out.emplace_back("Linnik GRH (phi(q) log q)^2",
                     LogValue::from_ln(2.0 * std::log(v)));
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // deterministic Miller-Rabin for 64-bit
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a :
       {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factor_invariants(std::uint64_t N) {
  if (N == 0) throw std::domain_error("factor_invariants: N must be >= 1");
  Factorization f;
  std::uint64_t n = N;
  auto take = [&](std::uint64_t p) {
    if (n % p) return;
    ++f.omega;
    f.log_rad += std::log(static_cast<double>(p));
    std::uint64_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    f.euler_phi *= pk / p * (p - 1);
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) {
    ++f.omega;
    f.log_rad += std::log(static_cast<double>(n));
    f.euler_phi *= n - 1;
  }
  return f;
}

}  // namespace cheb
