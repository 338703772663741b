#pragma once

#include "starfact/bigint.hpp"

#include <string>
#include <vector>

namespace starfact {

/// Power series in t with exact rational coefficients, truncated after t^N.
/// Every operation keeps the truncation order of its left operand.
class RationalSeries {
 public:
  /// The zero series of order `order`.
  explicit RationalSeries(int order);
  static RationalSeries constant(int order, const Rational& c);
  /// 2 sinh(t/2) / t = sum_k t^(2k) / (4^k (2k+1)!)
  static RationalSeries half_sinh_ratio(int order);

  int order() const { return static_cast<int>(coef_.size()) - 1; }
  const Rational& operator[](int k) const { return coef_[k]; }
  Rational& operator[](int k) { return coef_[k]; }
  /// [t^k]; zero beyond the truncation order.
  Rational coefficient(int k) const;

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries& operator*=(const Rational& c);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator*(RationalSeries a, const Rational& c) { return a *= c; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);

  /// 1 / this; throws std::domain_error when the constant term is zero.
  RationalSeries inverse() const;
  /// this^k for any integer k (negative powers go through inverse()).
  RationalSeries pow(int k) const;
  /// s(t) -> s(a t)
  RationalSeries rescaled(const Rational& a) const;

  bool operator==(const RationalSeries&) const = default;
  std::string to_string() const;

 private:
  std::vector<Rational> coef_;
};

} // namespace starfact
