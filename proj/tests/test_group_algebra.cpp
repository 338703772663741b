#include "starfact/group_algebra.hpp"
#include "starfact/symfunc.hpp"

#include <doctest.h>

#include <functional>

using namespace starfact;

namespace {

// Expands every monomial into its transposition tuples, J_2 factors first,
// and sums the products; `transitive` keeps only tuples acting transitively.
AlgebraElement tuple_oracle(const Polynomial& f, bool transitive) {
  const int n = f.degree_n();
  AlgebraElement out(n);
  for (const auto& [exps, coeff] : f.terms()) {
    std::vector<int> slots;
    for (int s = 2; s <= n; ++s)
      for (int k = 0; k < exps[s - 2]; ++k) slots.push_back(s);
    std::vector<Transposition> tuple;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == slots.size()) {
        if (transitive && !orbits(n, std::span<const Transposition>(tuple)).is_transitive()) return;
        out.add_term(product(n, tuple), coeff);
        return;
      }
      for (int j = 1; j < slots[pos]; ++j) {
        tuple.emplace_back(j, slots[pos]);
        rec(pos + 1);
        tuple.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

AlgebraElement class_total(int n, int cycles) {
  AlgebraElement x(n);
  for (const auto& lambda : partitions_of(n))
    if (lambda.length() == cycles) x += class_sum(lambda);
  return x;
}

} // namespace

TEST_CASE("Jucys-Murphy elements") {
  CHECK(jm_element(4, 1).is_zero());
  const AlgebraElement j3 = jm_element(3, 3);
  CHECK(j3.terms().size() == 2);
  CHECK(j3.coefficient_of(Permutation::parse("(1 3)(2)")) == 1);
  CHECK(j3.coefficient_of(Permutation::parse("(1)(2 3)")) == 1);
  CHECK_THROWS(jm_element(3, 4));
  CHECK_THROWS(jm_element(3, 0));
  for (int i = 2; i <= 5; ++i)
    for (int j = 2; j <= 5; ++j) CHECK(jm_element(5, i) * jm_element(5, j) == jm_element(5, j) * jm_element(5, i));
}

TEST_CASE("arithmetic") {
  const AlgebraElement j4 = jm_element(4, 4);
  const AlgebraElement p = j4.pow(4);
  CHECK(p.coefficient_of(Permutation(4)) == 15);
  CHECK(coefficient_of(Permutation::parse("(1 2)(3 4)"), p) == 4);
  CHECK(coefficient_of(Permutation::parse("(1 4)(2 3)"), p) == 4);
  CHECK(multiply(j4, AlgebraElement(4)).is_zero());
  CHECK(add(j4, j4 * Integer(-1)).is_zero());
  CHECK((j4 - j4).terms().empty());
  CHECK_THROWS(multiply(jm_element(3, 2), jm_element(4, 2)));
  // Products compose left to right.
  const auto a = AlgebraElement::of(Permutation::parse("(1 2)(3)"));
  const auto b = AlgebraElement::of(Permutation::parse("(1 3)(2)"));
  CHECK((a * b).coefficient_of(Permutation::parse("(1 2 3)")) == 1);
}

TEST_CASE("class sums and decomposition") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const AlgebraElement k = class_sum(lambda);
      CHECK(Integer(k.terms().size()) == lambda.class_size());
      const auto d = decompose(k);
      REQUIRE(d.size() == 1);
      CHECK(d.at(lambda) == 1);
      CHECK(recompose(n, d) == k);
    }
  const auto p4 = decompose(evaluate(power_sum(4, 4)));
  CHECK(render_decomposition(p4) == "22*K[1,1,1,1] + 8*K[3,1] + 4*K[2,2]");
  CHECK(render_decomposition(decompose(AlgebraElement(3))) == "0");
}

TEST_CASE("non-central elements carry a witness") {
  const AlgebraElement x = jm_element(4, 4).pow(4);
  CHECK_FALSE(is_central(x));
  try {
    decompose(x);
    FAIL("expected NotCentral");
  } catch (const NotCentral& e) {
    const auto& w = e.witness();
    CHECK(w.first.cycle_type() == w.second.cycle_type());
    CHECK(w.first_coefficient != w.second_coefficient);
    CHECK(x.coefficient_of(w.first) == w.first_coefficient);
    CHECK(x.coefficient_of(w.second) == w.second_coefficient);
  }
}

TEST_CASE("elementary functions of the J's are sums of class sums") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < n; ++k) CHECK(evaluate(elementary(n, k)) == class_total(n, n - k));
  CHECK(evaluate(elementary(3, 0)) == AlgebraElement::identity(3));
}

TEST_CASE("evaluation matches the tuple expansion") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : partitions_up_to(4, 4))
      for (auto b : {SymmetricBasis::e, SymmetricBasis::h, SymmetricBasis::p}) {
        const SymmetricFunction f{b, lambda};
        CAPTURE(f.to_string());
        CAPTURE(n);
        const Polynomial poly = expand(f, n);
        CHECK(evaluate(poly) == tuple_oracle(poly, false));
        CHECK(transitive_evaluate(poly) == tuple_oracle(poly, true));
        CHECK(is_central(evaluate(poly)));
      }
}

TEST_CASE("transitivity operator examples") {
  CHECK(render_decomposition(decompose(transitive_power(4, 4))) == "3*K[3,1] + 4*K[2,2]");
  CHECK(transitive_evaluate(SymmetricFunction{SymmetricBasis::p, Partition({4})}, 4) == transitive_power(4, 4));
  CHECK(transitive_evaluate(elementary(3, 1)).is_zero());
  CHECK(transitive_evaluate(elementary(3, 2)) == class_sum(Partition({3})));
  CHECK(transitive_evaluate(elementary(3, 2)) == evaluate(elementary(3, 2)));
  CHECK(transitive_power(2, 1) == jm_element(2, 2));
  // The empty tuple is transitive only on one point.
  CHECK(transitive_evaluate(Polynomial::constant(1, 1)) == AlgebraElement::identity(1));
  CHECK(transitive_evaluate(Polynomial::constant(2, 1)).is_zero());
}

TEST_CASE("factor-by-factor expansion agrees with the product polynomial") {
  for (int n = 2; n <= 4; ++n) {
    const Polynomial a = elementary(n, n - 1);
    const Polynomial b = elementary(n, 1);
    CHECK(transitive_evaluate_product({a, b}) == transitive_evaluate(a * b));
    CHECK(transitive_evaluate_product({complete(n, 2), power_sum(n, 2)}) ==
          transitive_evaluate(complete(n, 2) * power_sum(n, 2)));
  }
  CHECK_THROWS(transitive_evaluate_product({}));
}

TEST_CASE("transitive powers and the product form") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= 3; ++k) {
      const auto r = check_transitive_power_identity(n, k);
      CHECK(r.holds());
    }
  const auto r30 = check_transitive_power_identity(3, 0);
  CHECK(r30.product_form == jm_element(3, 2) * jm_element(3, 3));
  const auto r20 = check_transitive_power_identity(2, 0);
  CHECK(r20.transitive_jm_power == jm_element(2, 2));
  CHECK_THROWS(check_transitive_power_identity(1, 0));
}

TEST_CASE("span dimension") {
  CHECK(span_dimension({}) == 0);
  const AlgebraElement j = jm_element(3, 3);
  CHECK(span_dimension({j, j * Integer(2)}) == 1);
  CHECK(span_dimension({j, jm_element(3, 2), j + jm_element(3, 2)}) == 2);
  std::vector<AlgebraElement> classes;
  for (const auto& lambda : partitions_of(5)) classes.push_back(class_sum(lambda));
  CHECK(span_dimension(classes) == 7);
}

TEST_CASE("symmetric function expansion") {
  CHECK(elementary(3, 2) == Polynomial::variable_power(3, 2, 1) * Polynomial::variable_power(3, 3, 1));
  CHECK(complete(3, 0) == Polynomial::constant(3, 1));
  CHECK(elementary(4, 4).is_zero());
  CHECK(power_sum(3, 2) == Polynomial::variable_power(3, 2, 2) + Polynomial::variable_power(3, 3, 2));
  // Newton: p_2 = e_1^2 - 2 e_2
  for (int n = 1; n <= 5; ++n) CHECK(power_sum(n, 2) == elementary(n, 1).pow(2) - elementary(n, 2) * Integer(2));
  CHECK(partitions_up_to(3, 3).size() == 7);  // [], [1], [2], [1,1], [3], [2,1], [1,1,1]
  CHECK(partitions_up_to(4, 2).size() == 9);
}
