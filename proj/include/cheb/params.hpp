#ifndef CHEB_PARAMS_HPP
#define CHEB_PARAMS_HPP

#include <cmath>
#include <stdexcept>

namespace cheb {

// Free parameters of the Theorem 3.3 density bound.
struct DensityParams {
  double alpha;            // > 0
  double eta;              // > 0
  double omega;            // in (0,1)
  double xi;               // > 1
  double upsilon = 0.1;    // in (0, 0.1]
  double epsilon = 1e-5;   // in (0, 1/8)

  void validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw std::domain_error("DensityParams: alpha must be > 0");
    if (!(eta > 0.0) || !std::isfinite(eta))
      throw std::domain_error("DensityParams: eta must be > 0");
    if (!(omega > 0.0 && omega < 1.0))
      throw std::domain_error("DensityParams: omega must be in (0,1)");
    if (!(xi > 1.0) || !std::isfinite(xi))
      throw std::domain_error("DensityParams: xi must be > 1");
    if (!(upsilon > 0.0 && upsilon <= 0.1))
      throw std::domain_error("DensityParams: upsilon must be in (0,0.1]");
    if (!(epsilon > 0.0 && epsilon < 0.125))
      throw std::domain_error("DensityParams: epsilon must be in (0,1/8)");
  }
};

// Number-field / congruence-class-group invariants. All "log" fields are
// natural logs of quantities that are astronomically large in applications.
struct FieldInvariants {
  int n_K = 1;            // field degree, >= 1
  double log_D_K = 0.0;   // log |disc K|, >= 0
  double log_Q = 0.0;     // log of max conductor norm, >= 0
  double h_H = 1.0;       // index of the congruence class group, >= 1
  double log_Nm = 0.0;    // log N(m) for the modulus ideal, >= 0
  double T = 1.0;         // height cutoff, >= 1
  double delta0 = 1e-4;   // the fixed delta_0 in scriptL, > 0

  void validate() const {
    if (n_K < 1) throw std::domain_error("FieldInvariants: n_K must be >= 1");
    if (log_D_K < 0.0) throw std::domain_error("FieldInvariants: log_D_K < 0");
    if (log_Q < 0.0) throw std::domain_error("FieldInvariants: log_Q < 0");
    if (h_H < 1.0) throw std::domain_error("FieldInvariants: h_H < 1");
    if (log_Nm < 0.0) throw std::domain_error("FieldInvariants: log_Nm < 0");
    if (T < 1.0) throw std::domain_error("FieldInvariants: T < 1");
    if (!(delta0 > 0.0)) throw std::domain_error("FieldInvariants: delta0 <= 0");
  }
};

}  // namespace cheb

#endif
