#include "starfact/formulas.hpp"

#include "starfact/factorisations.hpp"
#include "starfact/series.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace starfact {

Integer stirling2(int m, int k) {
  if (m < 0 || k < 0) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;  // S(0,0)
  for (int r = 1; r <= m; ++r) {
    for (int c = std::min(r, k); c >= 1; --c) row[c] = c * row[c] + row[c - 1];
    row[0] = 0;
  }
  return row[k];
}

Integer central_factorial(int m, int k) {
  if (m < 0 || k < 0) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (int r = 1; r <= m; ++r) {
    for (int c = std::min(r, k); c >= 1; --c) row[c] = row[c - 1] + Integer(c) * c * row[c];
    row[0] = 0;
  }
  return row[k];
}

Integer catalan(int m) {
  if (m < 0) return 0;
  return exact_div(binomial(2 * m, m), Integer(m + 1), "Cat(" + std::to_string(m) + ")");
}

Integer feray_count(const Partition& lambda, int g) {
  const int n = lambda.size();
  if (n < 1) throw std::invalid_argument("feray_count needs a nonempty partition");
  if (g < 0) return 0;
  const int order = 2 * g;
  const RationalSeries f = RationalSeries::half_sinh_ratio(order);
  RationalSeries s = f.pow(n - 2);
  Integer prod_parts = 1;
  for (int part : lambda.parts()) {
    s = s * f.rescaled(Rational(part));
    prod_parts *= part;
  }
  const Rational value = Rational(factorial(2 * g + n + lambda.length() - 2), factorial(n)) *
                         Rational(prod_parts) * s.coefficient(order);
  if (denominator(value) != 1)
    throw std::logic_error("series formula gave a non-integer for " + lambda.to_string() + ", g=" + std::to_string(g));
  return numerator(value);
}

Integer md_full_cycle(int n, int g) {
  if (n < 2) throw std::invalid_argument("md_full_cycle needs n >= 2");
  return exact_div(stirling2(2 * g + n, n - 1), binomial(n, 2),
                   "S(2g+n,n-1)/C(n,2) at n=" + std::to_string(n) + ", g=" + std::to_string(g));
}

Integer md_identity(int n, int g) {
  if (n < 1) throw std::invalid_argument("md_identity needs n >= 1");
  return factorial(n - 1) * catalan(n - 1) * central_factorial(g + n - 1, n - 1);
}

namespace {

using RecKey = std::tuple<int, Partition, int>;

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}
std::map<RecKey, Integer>& memo() {
  static std::map<RecKey, Integer> table;
  return table;
}

Integer recurrence_star_rec(int i, const Partition& alpha, int g) {
  if (i <= 0 || g < 0) return 0;
  if (i == 1 && alpha.empty()) return g == 0 ? 1 : 0;
  const RecKey key{i, alpha, g};
  {
    std::lock_guard lock(memo_mutex());
    if (auto it = memo().find(key); it != memo().end()) return it->second;
  }
  // Every term has one factor fewer than (i, alpha, g), so this terminates.
  Integer v = recurrence_star_rec(i - 1, alpha, g);
  for (std::size_t t = 0; t < alpha.parts().size(); ++t) {
    const int part = alpha.parts()[t];
    v += part * recurrence_star_rec(i + part, alpha.without_index(t), g);
  }
  for (int t = 1; t < i; ++t) v += recurrence_star_rec(i - t, alpha.with_part(t), g - 1);
  std::lock_guard lock(memo_mutex());
  memo().emplace(key, v);  // idempotent: concurrent writers agree on v
  return v;
}

} // namespace

Integer recurrence_star(int i, const Partition& alpha, int g) { return recurrence_star_rec(i, alpha, g); }

IdentityRecurrenceCheck recurrence_md_identity_check(int n, int g) {
  if (n < 2 || g < 0) throw std::invalid_argument("need n >= 2 and g >= 0");
  IdentityRecurrenceCheck r;
  r.lhs = n * md_identity(n, g);
  const Integer prev_genus = g > 0 ? md_identity(n, g - 1) : Integer(0);
  r.rhs = Integer(n) * (n - 1) * (n - 1) * prev_genus + Integer(2) * (n - 1) * (2 * n - 3) * md_identity(n - 1, g);
  return r;
}

DoubleHurwitzRelationCheck b_relation_check(const Partition& alpha, int g, int max_n) {
  const int n = alpha.size();
  if (n < 1) throw std::invalid_argument("relation check needs a nonempty partition");
  if (n > max_n)
    throw std::out_of_range("relation check refused: |alpha| = " + std::to_string(n) + " exceeds the bound n <= " +
                            std::to_string(max_n) + " (S_" + std::to_string(2 * n - 1) + " enumeration)");
  const int big = 2 * n - 1;
  Partition beta = alpha;
  for (int k = 0; k < n - 1; ++k) beta = beta.with_part(1);

  DoubleHurwitzRelationCheck r;
  r.double_hurwitz_count = count_double_hurwitz(Partition(std::vector<int>{big}), beta, g);
  r.lhs = Rational(r.double_hurwitz_count, beta.class_size());
  r.star_count = count_star(alpha.representative(), g, n);
  const int e = n + alpha.length() + 2 * g - 3;
  Integer power = 1;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) power *= big;
  r.rhs = e < 0 ? Rational(factorial(n) * r.star_count, power) : Rational(factorial(n) * power * r.star_count);
  return r;
}

} // namespace starfact
