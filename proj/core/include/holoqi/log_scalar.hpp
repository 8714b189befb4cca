#pragma once

#include <cmath>
#include <limits>

#include "holoqi/errors.hpp"

namespace holoqi {

/// A strictly positive quantity stored as its natural log, for values such as
/// mu_max ~ e^{pi R_p^2} that overflow double long before R_p is macroscopic.
/// Multiplication/division/powers are exact log-domain arithmetic; addition
/// uses log-sum-exp.
class LogScalar {
 public:
  LogScalar() : ln_(0.0) {}  // represents 1

  static LogScalar from_ln(double ln_value) {
    if (std::isnan(ln_value)) throw DomainError("LogScalar: ln value is NaN");
    return LogScalar(ln_value);
  }

  static LogScalar from_linear(double value) {
    if (!(value > 0.0)) throw DomainError("LogScalar: value must be positive");
    return LogScalar(std::log(value));
  }

  double ln() const { return ln_; }

  /// exp(ln); +inf when the value exceeds double range.
  double linear() const { return std::exp(ln_); }

  /// True when linear() neither overflows nor underflows to zero.
  bool linear_representable() const {
    // log(DBL_MAX) = 709.78, log(DBL_MIN) = -708.40 (normal range)
    return ln_ < 709.0 && ln_ > -708.0;
  }

  LogScalar operator*(LogScalar other) const { return LogScalar(ln_ + other.ln_); }
  LogScalar operator/(LogScalar other) const { return LogScalar(ln_ - other.ln_); }

  /// this + other via log-sum-exp; exact when one term dominates completely.
  LogScalar operator+(LogScalar other) const {
    const double hi = std::max(ln_, other.ln_);
    const double lo = std::min(ln_, other.ln_);
    return LogScalar(hi + std::log1p(std::exp(lo - hi)));
  }

  LogScalar pow(double exponent) const { return LogScalar(ln_ * exponent); }

  friend bool operator<(LogScalar a, LogScalar b) { return a.ln_ < b.ln_; }
  friend bool operator>(LogScalar a, LogScalar b) { return a.ln_ > b.ln_; }
  friend bool operator<=(LogScalar a, LogScalar b) { return a.ln_ <= b.ln_; }
  friend bool operator>=(LogScalar a, LogScalar b) { return a.ln_ >= b.ln_; }

 private:
  explicit LogScalar(double ln_value) : ln_(ln_value) {}

  double ln_;
};

}  // namespace holoqi
