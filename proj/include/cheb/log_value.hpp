#ifndef CHEB_LOG_VALUE_HPP
#define CHEB_LOG_VALUE_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cheb {

// Nonnegative real stored as its natural log. Quantities here span roughly
// e^{-1000} .. e^{+100000}, far outside double range.
class LogValue {
 public:
  LogValue() : ln_(-std::numeric_limits<double>::infinity()), zero_(true) {}

  static LogValue zero() { return LogValue(); }

  static LogValue from_ln(double ln) {
    LogValue v;
    v.ln_ = ln;
    v.zero_ = false;
    return v;
  }

  static LogValue from_value(double x) {
    if (x < 0.0 || std::isnan(x))
      throw std::domain_error("LogValue: negative or NaN value");
    if (x == 0.0) return zero();
    return from_ln(std::log(x));
  }

  bool is_zero() const { return zero_; }
  double ln() const {
    if (zero_) return -std::numeric_limits<double>::infinity();
    return ln_;
  }
  // exp(ln); underflows/overflows to 0/inf as doubles do
  double value() const { return zero_ ? 0.0 : std::exp(ln_); }

  LogValue operator+(const LogValue& o) const {
    if (zero_) return o;
    if (o.zero_) return *this;
    double hi = std::max(ln_, o.ln_), lo = std::min(ln_, o.ln_);
    return from_ln(hi + std::log1p(std::exp(lo - hi)));
  }

  // this - o; throws if o > this
  LogValue sub(const LogValue& o) const {
    if (o.zero_) return *this;
    if (zero_ || o.ln_ > ln_)
      throw std::domain_error("LogValue::sub: result would be negative");
    if (o.ln_ == ln_) return zero();
    // log(e^a - e^b) = a + log(1 - e^{b-a})
    return from_ln(ln_ + std::log(-std::expm1(o.ln_ - ln_)));
  }

  LogValue operator*(const LogValue& o) const {
    if (zero_ || o.zero_) return zero();
    return from_ln(ln_ + o.ln_);
  }

  LogValue operator/(const LogValue& o) const {
    if (o.zero_) throw std::domain_error("LogValue: division by zero");
    if (zero_) return zero();
    return from_ln(ln_ - o.ln_);
  }

  LogValue pow(double e) const {
    if (zero_) {
      if (e <= 0.0) throw std::domain_error("LogValue: 0^e with e <= 0");
      return zero();
    }
    return from_ln(ln_ * e);
  }

  bool operator<(const LogValue& o) const {
    if (zero_) return !o.zero_;
    if (o.zero_) return false;
    return ln_ < o.ln_;
  }
  bool operator>(const LogValue& o) const { return o < *this; }

 private:
  double ln_;
  bool zero_;
};

}  // namespace cheb

#endif
