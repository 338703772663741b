#include "starfact/perm_table.hpp"
#include "starfact/permutation.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace starfact;

TEST_CASE("cycle notation round trip") {
  const Permutation p = Permutation::parse("(1 2)(3)");
  CHECK(p.degree() == 3);
  CHECK(p(1) == 2);
  CHECK(p(2) == 1);
  CHECK(p(3) == 3);
  CHECK(p.to_string() == "(1 2)(3)");
  CHECK(Permutation::parse("(3 1 2)").to_string() == "(1 2 3)");
  CHECK(Permutation::parse("(2 3)", 4).to_string() == "(1)(2 3)(4)");
  CHECK_THROWS_AS(Permutation::parse("(1 2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1 1)"), std::invalid_argument);
}

TEST_CASE("products apply the left factor first") {
  const Permutation a = Permutation::parse("(1 2)(3)");
  const Permutation b = Permutation::parse("(1 3)(2)");
  // 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
  CHECK((a * b).to_string() == "(1 2 3)");
  CHECK(product(3, parse_transpositions("(1 2)(1 3)")) == Permutation::parse("(1 2 3)"));
}

TEST_CASE("composition is associative with a two-sided identity on S_3") {
  const auto all = all_permutations(3);
  const Permutation e(3);
  for (const auto& p : all) {
    CHECK(p * e == p);
    CHECK(e * p == p);
    CHECK(p * p.inverse() == e);
    for (const auto& q : all)
      for (const auto& r : all) CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("conjugation keeps the cycle type on S_4") {
  const auto all = all_permutations(4);
  for (const auto& p : all)
    for (const auto& d : all) {
      const Permutation c = conjugate(p, d);
      CHECK(c.cycle_type() == p.cycle_type());
      CHECK(c == d * p * d.inverse());
    }
}

TEST_CASE("join or cut follows the change in cycle count on S_4") {
  for (const auto& nu : all_permutations(4))
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b) {
        const Transposition t(a, b);
        const int delta = (nu * t.as_permutation(4)).cycle_count() - nu.cycle_count();
        CHECK(delta * delta == 1);
        CHECK((join_cut(nu, t) == JoinCut::join) == (delta == -1));
      }
}

TEST_CASE("the star generators are transitive") {
  for (int n = 1; n <= 9; ++n) {
    std::vector<Transposition> star;
    for (int i = 1; i < n; ++i) star.emplace_back(i, n);
    CHECK(orbits(n, std::span<const Transposition>(star)).is_transitive());
    if (n > 2) {
      star.pop_back();
      CHECK_FALSE(orbits(n, std::span<const Transposition>(star)).is_transitive());
    }
  }
}

TEST_CASE("transpositions are unordered and display under an order") {
  const Transposition t(3, 1);
  CHECK(t == Transposition(1, 3));
  CHECK(t.to_string() == "(1 3)");
  const TotalOrder o = TotalOrder::parse("3<2<1");
  CHECK(t.smaller(o) == 3);
  CHECK(t.larger(o) == 1);
  CHECK(t.to_string(o) == "(3 1)");
  CHECK_THROWS(Transposition(2, 2));
}

TEST_CASE("partitions parse, print and count their classes") {
  CHECK(Partition::parse("[3,1,1]").to_string() == "[3,1,1]");
  CHECK(Partition::parse("[]").empty());
  CHECK(Partition::parse("[1,3,1]") == Partition({3, 1, 1}));
  CHECK_THROWS(Partition::parse("3,1"));
  CHECK_THROWS(Partition::parse("[0]"));
  Integer total = 0;
  for (const auto& lambda : partitions_of(6)) {
    total += lambda.class_size();
    CHECK(lambda.representative().cycle_type() == lambda);
  }
  CHECK(total == 720);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("total orders") {
  const TotalOrder o = TotalOrder::parse("3<2<1");
  CHECK(o.size() == 3);
  CHECK(o.less(3, 1));
  CHECK(o.to_string() == "3<2<1");
  CHECK(o.swapped(1).to_string() == "2<3<1");
  CHECK(TotalOrder::natural(4).is_natural());
  CHECK_THROWS(TotalOrder::parse("1<1<2"));
}

TEST_CASE("bubble-sort decomposition reaches every order of S_4") {
  for (const auto& p : all_permutations(4)) {
    const TotalOrder target(p.images());
    TotalOrder cur = TotalOrder::natural(4);
    for (int j : simple_reflection_decomposition(target)) cur = cur.swapped(j);
    CHECK(cur == target);
    CHECK(simple_reflection_decomposition(target) == simple_reflection_decomposition(target));
  }
}

TEST_CASE("order from a conjugator") {
  const Permutation d = Permutation::parse("(1 3)(2)");
  const TotalOrder o = order_from_conjugator(d);
  // d^-1(1) < d^-1(2) < d^-1(3)
  CHECK(o.to_string() == "3<2<1");
}

TEST_CASE("orbit partitions join blocks") {
  const OrbitPartition s = OrbitPartition::singletons(4);
  CHECK(s.block_count() == 4);
  const OrbitPartition j = s.joined(1, 3).joined(2, 4);
  CHECK(j.block_count() == 2);
  CHECK(j.block_of(1) == j.block_of(3));
  CHECK_FALSE(j.is_transitive());
  CHECK(j.joined(3, 4).is_transitive());
}

TEST_CASE("the permutation table ranks lexicographically") {
  for (int n = 1; n <= 6; ++n) {
    const PermTable& t = PermTable::get(n);
    CHECK(t.size() == static_cast<std::size_t>(factorial(n)));
    CHECK(t.at(t.identity_index()).is_identity());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Permutation& p = t.at(static_cast<PermTable::Index>(i));
      REQUIRE(t.index_of(p) == i);
      if (i) CHECK(t.at(static_cast<PermTable::Index>(i - 1)).images() < p.images());
      for (int b = 2; b <= n; ++b)
        for (int a = 1; a < b; ++a)
          CHECK(t.at(t.times_transposition(static_cast<PermTable::Index>(i), a, b)) ==
                p * Permutation::transposition(n, a, b));
    }
  }
}

TEST_CASE("random products agree with pointwise composition") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 9;
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) a[i] = b[i] = i + 1;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation p = Permutation::from_images(a), q = Permutation::from_images(b);
    const Permutation r = p * q;
    for (int s = 1; s <= n; ++s) CHECK(r(s) == q(p(s)));
    CHECK(Permutation::parse(r.to_string()) == r);
  }
}
