#pragma once

#include <cstdio>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace roughlab {

/// Exact fraction, always reduced, denominator positive. Accuracies are
/// ratios of set cardinalities, so the magnitudes involved are tiny.
class Rational {
 public:
  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool operator==(const Rational& o) const = default;

  /// "1/3"; integers print without the denominator.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  long long num_;
  long long den_;
};

/// Accuracy of an approximation: a fraction, or indefinite (no value) when
/// the defining ratio has a vanishing denominator.
using Accuracy = std::optional<Rational>;

/// "1/3 (0.3333)" or the literal "indefinite".
inline std::string accuracy_str(const Accuracy& a) {
  if (!a) return "indefinite";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", a->value());
  return a->str() + " (" + buf + ")";
}

}  // namespace roughlab
