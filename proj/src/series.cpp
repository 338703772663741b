#include "starfact/series.hpp"

#include <sstream>
#include <stdexcept>

namespace starfact {

RationalSeries::RationalSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coef_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

RationalSeries RationalSeries::constant(int order, const Rational& c) {
  RationalSeries s(order);
  s.coef_[0] = c;
  return s;
}

RationalSeries RationalSeries::half_sinh_ratio(int order) {
  RationalSeries s(order);
  Integer four_pow = 1;
  for (int k = 0; 2 * k <= order; ++k) {
    s.coef_[2 * k] = Rational(Integer(1), four_pow * factorial(2 * k + 1));
    four_pow *= 4;
  }
  return s;
}

Rational RationalSeries::coefficient(int k) const {
  if (k < 0 || k > order()) return Rational(0);
  return coef_[k];
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  for (int k = 0; k <= order(); ++k) coef_[k] += o.coefficient(k);
  return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& c) {
  for (auto& v : coef_) v *= c;
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (int j = 0; i + j <= a.order() && j <= b.order(); ++j) out.coef_[i + j] += a.coef_[i] * b.coef_[j];
  }
  return out;
}

RationalSeries RationalSeries::inverse() const {
  if (coef_[0] == 0) throw std::domain_error("series with zero constant term has no inverse");
  RationalSeries out(order());
  out.coef_[0] = 1 / coef_[0];
  for (int k = 1; k <= order(); ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += coef_[j] * out.coef_[k - j];
    out.coef_[k] = -acc / coef_[0];
  }
  return out;
}

RationalSeries RationalSeries::pow(int k) const {
  const RationalSeries base = k < 0 ? inverse() : *this;
  RationalSeries out = constant(order(), 1);
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

RationalSeries RationalSeries::rescaled(const Rational& a) const {
  RationalSeries out(order());
  Rational p = 1;
  for (int k = 0; k <= order(); ++k) {
    out.coef_[k] = coef_[k] * p;
    p *= a;
  }
  return out;
}

std::string RationalSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (coef_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << coef_[k];
    if (k > 0) out << "*t^" << k;
  }
  if (first) out << "0";
  out << " + O(t^" << order() + 1 << ")";
  return out.str();
}

} // namespace starfact
