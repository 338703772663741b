#include "starfact/factorisations.hpp"
#include "starfact/formulas.hpp"
#include "starfact/series.hpp"

#include <doctest.h>

#include <functional>

using namespace starfact;

namespace {

// Set partitions of [m] into exactly k blocks, by restricted growth strings.
Integer brute_stirling2(int m, int k) {
  Integer count = 0;
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == m) {
      if (blocks == k) count += 1;
      return;
    }
    for (int b = 0; b <= blocks && b < k; ++b) rec(pos + 1, std::max(blocks, b + 1));
  };
  if (m == 0) return k == 0 ? 1 : 0;
  rec(0, 0);
  return count;
}

// T(m, k) = h_{m-k}(1^2, 2^2, ..., k^2).
Integer brute_central_factorial(int m, int k) {
  if (k > m) return 0;
  Integer total = 0;
  std::function<void(int, int, Integer)> rec = [&](int left, int from, Integer acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (int i = from; i <= k; ++i) rec(left - 1, i, acc * i * i);
  };
  rec(m - k, 1, 1);
  return total;
}

// Dyck paths of semilength m.
Integer brute_catalan(int m) {
  Integer count = 0;
  std::function<void(int, int)> rec = [&](int up, int height) {
    if (up == m && height == 0) {
      count += 1;
      return;
    }
    if (up < m) rec(up + 1, height + 1);
    if (height > 0) rec(up, height - 1);
  };
  rec(0, 0);
  return count;
}

} // namespace

TEST_CASE("number triangles against enumeration") {
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m + 1; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(stirling2(m, k) == brute_stirling2(m, k));
      CHECK(central_factorial(m, k) == brute_central_factorial(m, k));
    }
  for (int m = 0; m <= 10; ++m) CHECK(catalan(m) == brute_catalan(m));
  CHECK(stirling2(5, 2) == 15);
  CHECK(central_factorial(4, 2) == 21);
  CHECK(catalan(5) == 42);
}

TEST_CASE("closed forms, examples") {
  CHECK(feray_count(Partition({3}), 1) == 5);
  CHECK(feray_count(Partition({2, 1}), 0) == 2);
  CHECK(md_identity(3, 1) == 20);
  CHECK(md_full_cycle(3, 1) == 5);
  CHECK(md_identity(3, 0) == 4);
  CHECK_THROWS(md_full_cycle(1, 0));
}

TEST_CASE("closed forms against counts") {
  for (int n = 1; n <= 5; ++n)
    for (int g = 0; g <= 2; ++g) {
      CAPTURE(n);
      CAPTURE(g);
      const Permutation id(n);
      CHECK(md_identity(n, g) == count_monotone_double(id, g));
      if (n > 1) {
        std::vector<int> entries(n);
        for (int s = 1; s <= n; ++s) entries[s - 1] = s;
        CHECK(md_full_cycle(n, g) == count_monotone_double(Permutation::cycle(n, entries), g));
      }
      for (const auto& lambda : partitions_of(n)) CHECK(feray_count(lambda, g) == count_star(lambda.representative(), g, lambda.size()));
    }
}

TEST_CASE("series arithmetic") {
  const RationalSeries f = RationalSeries::half_sinh_ratio(6);
  CHECK(f[0] == 1);
  CHECK(f[1] == 0);
  CHECK(f[2] == Rational(1, 24));
  CHECK(f[4] == Rational(1, 1920));
  CHECK(f.coefficient(9) == 0);
  const RationalSeries one = RationalSeries::constant(6, 1);
  CHECK(f * f.inverse() == one);
  CHECK(f.pow(3) == f * f * f);
  CHECK(f.pow(-2) * f.pow(2) == one);
  CHECK(f.pow(0) == one);
  CHECK_THROWS_AS(RationalSeries(4).inverse(), std::domain_error);
  CHECK(f.rescaled(2)[2] == Rational(1, 6));
}

TEST_CASE("join-cut recurrence") {
  CHECK(recurrence_star(1, Partition(), 0) == 1);
  CHECK(recurrence_star(1, Partition(), 1) == 0);
  for (int N = 1; N <= 5; ++N)
    for (int i = 1; i <= N; ++i)
      for (const auto& alpha : partitions_of(N - i))
        for (int g = 0; g <= 2; ++g) {
          const Partition lambda = alpha.with_part(i);
          CAPTURE(lambda.to_string());
          CAPTURE(i);
          CHECK(recurrence_star(i, alpha, g) == count_star(lambda.representative(), g, lambda.size()));
        }
}

TEST_CASE("identity recurrence for monotone double counts") {
  for (int n = 2; n <= 6; ++n)
    for (int g = 1; g <= 3; ++g) CHECK(recurrence_md_identity_check(n, g).holds());
}

TEST_CASE("double Hurwitz relation") {
  const auto r = b_relation_check(Partition({2}), 0);
  CHECK(r.holds());
  CHECK(r.star_count == count_star(Partition({2}).representative(), 0, 2));
  CHECK(b_relation_check(Partition({1, 1}), 1).holds());
  CHECK(b_relation_check(Partition({1}), 0).holds());
  CHECK_THROWS_AS(b_relation_check(Partition({4}), 0), std::out_of_range);
}
