#include "starfact/factorisations.hpp"
#include "starfact/group_algebra.hpp"
#include "starfact/perm_table.hpp"

#include <doctest.h>

#include <functional>

using namespace starfact;

namespace {

std::vector<Transposition> all_transpositions(int n) {
  std::vector<Transposition> out;
  for (int b = 2; b <= n; ++b)
    for (int a = 1; a < b; ++a) out.emplace_back(a, b);
  return out;
}

// Calls visit on every length-m sequence over `alphabet`.
template <class T>
void for_each_word(const std::vector<T>& alphabet, int m, const std::function<void(const std::vector<T>&)>& visit) {
  std::vector<T> word;
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == m) {
      visit(word);
      return;
    }
    for (const auto& x : alphabet) {
      word.push_back(x);
      rec();
      word.pop_back();
    }
  };
  rec();
}

Integer brute_star(const Permutation& w, int g, int root) {
  const int n = w.degree();
  const int m = star_length(n, w, g);
  if (m < 0) return 0;
  std::vector<int> legs;
  for (int s = 1; s <= n; ++s)
    if (s != root) legs.push_back(s);
  Integer count = 0;
  for_each_word<int>(legs, m, [&](const std::vector<int>& word) {
    std::vector<Transposition> f;
    for (int a : word) f.emplace_back(a, root);
    std::vector<bool> seen(n + 1, false);
    for (int a : word) seen[a] = true;
    bool all = true;
    for (int a : legs) all = all && seen[a];
    if (all && product(n, f) == w) ++count;
  });
  return count;
}

Integer brute_monotone(const Permutation& w, int g, const TotalOrder& order) {
  const int n = w.degree();
  const int m = monotone_length(n, w, g);
  if (m < 0) return 0;
  Integer count = 0;
  for_each_word<Transposition>(all_transpositions(n), m, [&](const std::vector<Transposition>& f) {
    if (is_monotone(f, order) && product(n, f) == w) ++count;
  });
  return count;
}

Integer brute_monotone_double(const Permutation& w, int g) {
  const int n = w.degree();
  const int m = monotone_double_length(w, g);
  if (m < 0) return 0;
  Integer count = 0;
  const TotalOrder natural = TotalOrder::natural(n);
  for (const auto& sigma : all_permutations(n)) {
    if (sigma.cycle_count() != 1) continue;
    for_each_word<Transposition>(all_transpositions(n), m, [&](const std::vector<Transposition>& f) {
      if (is_monotone(f, natural) && sigma * product(n, f) == w) ++count;
    });
  }
  return count;
}

Integer brute_double_hurwitz(const Partition& alpha, const Partition& beta, int g) {
  const int n = alpha.size();
  const int m = alpha.length() + beta.length() - 2 + 2 * g;
  if (m < 0) return 0;
  Integer count = 0;
  for (const auto& sigma : all_permutations(n)) {
    if (sigma.cycle_type() != alpha) continue;
    for_each_word<Transposition>(all_transpositions(n), m, [&](const std::vector<Transposition>& f) {
      if ((sigma * product(n, f)).cycle_type() != beta) return;
      std::vector<Permutation> gens{sigma};
      for (const auto& t : f) gens.push_back(t.as_permutation(n));
      if (orbits(n, std::span<const Permutation>(gens)).is_transitive()) ++count;
    });
  }
  return count;
}

} // namespace

TEST_CASE("star factorisations of (1 2)(3)") {
  const Permutation w = Permutation::parse("(1 2)(3)");
  const auto fs = enumerate_star(w, 0, 3);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].legs == std::vector<int>{1, 2, 1});
  CHECK(fs[1].legs == std::vector<int>{2, 1, 2});
  CHECK(count_star(w, 0, 3) == 2);
  CHECK(count_star(Permutation::parse("(1)(2 3)"), 0, 3) == 2);
}

TEST_CASE("small star cases") {
  const auto two = enumerate_star(Permutation::parse("(1 2)"), 0, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].legs == std::vector<int>{1});
  const auto one = enumerate_star(Permutation(1), 0, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].legs.empty());
  CHECK(count_star(Permutation(1), 0, 1) == 1);
  CHECK(enumerate_star(Permutation(3), -1, 3).empty());
  CHECK_THROWS(enumerate_star(Permutation(3), 0, 4));
}

TEST_CASE("unconstrained star counts") {
  CHECK(count_star_unconstrained(Permutation::parse("(1 2)(3)"), 3, 3) == 2);
  CHECK(count_star_unconstrained(Permutation::parse("(1)(2 3)"), 3, 3) == 3);
  CHECK(count_star_unconstrained(Permutation(4), 4, 4) == 15);
  for (const auto& w : all_permutations(3)) CHECK(count_star_unconstrained(w, 0, 3) == (w.is_identity() ? 1 : 0));
  // Against the coefficients of J_n^m.
  for (int n = 2; n <= 4; ++n) {
    AlgebraElement power = AlgebraElement::identity(n);
    for (int m = 0; m <= 5; ++m) {
      for (const auto& w : all_permutations(n)) CHECK(count_star_unconstrained(w, m, n) == power.coefficient_of(w));
      power = power * jm_element(n, n);
    }
  }
}

TEST_CASE("star counts match a brute-force oracle") {
  for (int n = 1; n <= 4; ++n)
    for (int g = 0; g <= 1; ++g)
      for (const auto& w : all_permutations(n))
        for (int root = 1; root <= n; ++root) {
          CAPTURE(w.to_string());
          const Integer want = brute_star(w, g, root);
          CHECK(count_star(w, g, root) == want);
          CHECK(Integer(enumerate_star(w, g, root).size()) == want);
        }
}

TEST_CASE("listed star factorisations are members in lexicographic order") {
  for (const auto& w : all_permutations(4)) {
    const auto fs = enumerate_star(w, 1, 4);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      CHECK_FALSE(star_violation(fs[k]).has_value());
      if (k) CHECK(fs[k - 1].legs < fs[k].legs);
    }
  }
}

TEST_CASE("star membership messages name the condition") {
  const Permutation w = Permutation::parse("(2 3)");
  const auto why = star_violation(3, 3, {1, 1}, w, 0);
  REQUIRE(why.has_value());
  CHECK(*why == "condition S2' violated: (2 3) never appears");
  const auto s1 = star_violation(3, 3, {1, 2}, Permutation::parse("(1 2)(3)"), 0);
  REQUIRE(s1.has_value());
  CHECK(s1->find("S1") != std::string::npos);
  CHECK(star_violation(3, 3, {1, 2, 1}, Permutation::parse("(1 2)(3)"), 0) == std::nullopt);
}

TEST_CASE("monotone factorisations") {
  const auto fs = enumerate_monotone(Permutation::parse("(1 3 2)"), 0, TotalOrder::natural(3));
  REQUIRE(fs.size() == 2);
  CHECK(to_string(fs[0].factors) == "(1 2)(2 3)");
  CHECK(to_string(fs[1].factors) == "(2 3)(1 3)");
  for (const auto& o : all_permutations(3)) {
    const auto id = enumerate_monotone(Permutation(3), 0, TotalOrder(o.images()));
    REQUIRE(id.size() == 1);
    CHECK(id[0].factors.empty());
  }
  const auto single = enumerate_monotone(Permutation::parse("(1 2)(3)"), 0, TotalOrder::natural(3));
  REQUIRE(single.size() == 1);
  CHECK(to_string(single[0].factors) == "(1 2)");
}

TEST_CASE("monotone counts match a brute-force oracle under every order") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& o : all_permutations(n)) {
      const TotalOrder order(o.images());
      for (int g = 0; g <= 1; ++g)
        for (const auto& w : all_permutations(n)) {
          const Integer want = brute_monotone(w, g, order);
          CHECK(count_monotone(w, g, order) == want);
          CHECK(Integer(enumerate_monotone(w, g, order).size()) == want);
        }
    }
}

TEST_CASE("monotone double factorisations") {
  const auto fs = enumerate_monotone_double(Permutation::parse("(1 2)(3)"), 0);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].sigma.to_string() == "(1 2 3)");
  CHECK(to_string(fs[0].factors) == "(1 3)");
  CHECK(fs[1].sigma.to_string() == "(1 3 2)");
  CHECK(to_string(fs[1].factors) == "(2 3)");
  const auto cyc = enumerate_monotone_double(Permutation::parse("(1 2 3)"), 0);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].factors.empty());
  CHECK(enumerate_monotone_double(Permutation(3), 0).size() == 4);
  for (int n = 1; n <= 4; ++n)
    for (int g = 0; g <= 1; ++g)
      for (const auto& w : all_permutations(n)) {
        const Integer want = brute_monotone_double(w, g);
        CHECK(count_monotone_double(w, g) == want);
        CHECK(Integer(enumerate_monotone_double(w, g).size()) == want);
      }
}

TEST_CASE("monotone membership messages") {
  MonotoneFactorisation f{TotalOrder::natural(3), parse_transpositions("(2 3)(1 2)"), Permutation::parse("(1 2 3)"), 0};
  f.target = product(3, f.factors);
  const auto why = monotone_violation(f);
  REQUIRE(why.has_value());
  CHECK(why->find("H2") != std::string::npos);
  MonotoneDoubleFactorisation d{Permutation::parse("(1 2)(3)"), {}, Permutation::parse("(1 2)(3)"), 0};
  const auto h0 = monotone_double_violation(d);
  REQUIRE(h0.has_value());
  CHECK(h0->find("H0") != std::string::npos);
}

TEST_CASE("strictly monotone factorisations") {
  CHECK(to_string(strictly_monotone_factorisation(Permutation::parse("(1 2 3)"))) == "(1 2)(1 3)");
  CHECK(strictly_monotone_factorisation(Permutation(4)).empty());
  CHECK(to_string(strictly_monotone_factorisation(Permutation::parse("(1 2)"))) == "(1 2)");
  // Uniqueness against exhaustive search over strictly increasing sequences.
  for (int n = 1; n <= 5; ++n) {
    std::map<Permutation, int> hits;
    std::vector<Transposition> cur;
    std::function<void(int)> rec = [&](int last) {
      ++hits[product(n, cur)];
      for (int i = last + 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
          cur.emplace_back(j, i);
          rec(i);
          cur.pop_back();
        }
    };
    rec(1);
    for (const auto& w : all_permutations(n)) {
      CHECK(hits[w] == 1);
      const auto f = strictly_monotone_factorisation(w);
      CHECK(product(n, f) == w);
      CHECK(static_cast<int>(f.size()) == n - w.cycle_count());
    }
  }
}

TEST_CASE("double Hurwitz counts") {
  CHECK(count_double_hurwitz(Partition({3}), Partition({2, 1}), 0) == 6);
  CHECK(double_hurwitz_b(Partition({2, 1}), 0) == 2);
  CHECK(count_double_hurwitz(Partition({2}), Partition({2}), 0) == 1);
  CHECK(double_hurwitz_b(Partition({2}), 0) == 1);
  // m = 2 here: each 3-cycle is a product of two transpositions in 3 ways.
  CHECK(count_double_hurwitz(Partition({3}), Partition({1, 1, 1}), 0) == 6);
  for (int n = 1; n <= 4; ++n)
    for (const auto& alpha : partitions_of(n))
      for (const auto& beta : partitions_of(n))
        for (int g = 0; g <= (n <= 3 ? 1 : 0); ++g) {
          CAPTURE(alpha.to_string());
          CAPTURE(beta.to_string());
          CHECK(count_double_hurwitz(alpha, beta, g) == brute_double_hurwitz(alpha, beta, g));
        }
}

TEST_CASE("counting layers agree with the single-target counters") {
  const int n = 4;
  const PermTable& t = PermTable::get(n);
  const auto layers = star_count_layers(n, 2, 8, true);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Permutation& w = t.at(static_cast<PermTable::Index>(i));
    for (int g = 0; g <= 1; ++g) {
      const int m = star_length(n, w, g);
      CHECK(layers[m][i] == count_star(w, g, 2));
    }
  }
}

TEST_CASE("genus is derived from the length") {
  CHECK(monotone_genus_of(3, Permutation(3), 0) == 0);
  CHECK(monotone_genus_of(3, Permutation(3), 2) == 1);
  CHECK(monotone_genus_of(3, Permutation::parse("(1 2)(3)"), 1) == 0);
  CHECK(monotone_genus_of(3, Permutation(3), 3) == std::nullopt);
  CHECK(monotone_genus_of(3, Permutation::parse("(1 2 3)"), 0) == std::nullopt);
}
