#include "starfact/bijections.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace starfact;

namespace {

std::vector<Transposition> all_transpositions(int n) {
  std::vector<Transposition> out;
  for (int b = 2; b <= n; ++b)
    for (int a = 1; a < b; ++a) out.emplace_back(a, b);
  return out;
}

Permutation pair_product(const TranspositionPair& p, int n) { return p.first.as_permutation(n) * p.second.as_permutation(n); }

MonotoneFactorisation monotone(const std::string& factors, const TotalOrder& order) {
  const auto fs = parse_transpositions(factors);
  const Permutation w = product(order.size(), fs);
  return {order, fs, w, *monotone_genus_of(order.size(), w, static_cast<int>(fs.size()))};
}

} // namespace

TEST_CASE("Hurwitz moves") {
  CHECK(rhm({Transposition(1, 2), Transposition(1, 3)}) == TranspositionPair{Transposition(2, 3), Transposition(1, 2)});
  CHECK(rhm({Transposition(1, 2), Transposition(3, 4)}) == TranspositionPair{Transposition(3, 4), Transposition(1, 2)});
  CHECK(lhm({Transposition(2, 3), Transposition(1, 2)}) == TranspositionPair{Transposition(1, 2), Transposition(1, 3)});
  CHECK(lhm({Transposition(1, 2), Transposition(3, 4)}) == TranspositionPair{Transposition(3, 4), Transposition(1, 2)});
  for (const auto& a : all_transpositions(4))
    for (const auto& b : all_transpositions(4)) {
      const TranspositionPair x{a, b};
      CHECK(lhm(rhm(x)) == x);
      CHECK(rhm(lhm(x)) == x);
      CHECK(pair_product(rhm(x), 4) == pair_product(x, 4));
      CHECK(pair_product(lhm(x), 4) == pair_product(x, 4));
    }
}

TEST_CASE("lambda_j worked example") {
  const auto f = monotone("(1 2)(1 3)", TotalOrder::natural(3));
  HurwitzMoveTrace trace;
  const auto h = lambda_j(f, 2, &trace);
  CHECK(h.order.to_string() == "1<3<2");
  CHECK(to_string(h.factors) == "(2 3)(1 2)");
  CHECK(h.target == f.target);
  CHECK_FALSE(trace.empty());
  std::vector<Transposition> replayed = f.factors;
  CHECK(trace.replay(replayed));
  CHECK(replayed == h.factors);
  CHECK(lambda_j_inverse(h, 2) == f);
}

TEST_CASE("lambda_j fixes factorisations avoiding the swapped symbols") {
  const auto f = monotone("(1 2)", TotalOrder::natural(4));
  HurwitzMoveTrace trace;
  const auto h = lambda_j(f, 3, &trace);
  CHECK(h.factors == f.factors);
  CHECK(trace.empty());
  HurwitzMoveTrace none;
  CHECK(lambda_j(monotone("()", TotalOrder::natural(3)), 1, &none).factors.empty());
  CHECK(none.empty());
}

TEST_CASE("lambda_j rejects non-monotone input") {
  CHECK_THROWS_AS(lambda_j(parse_transpositions("(2 3)(1 2)"), TotalOrder::natural(3), 1), std::invalid_argument);
}

TEST_CASE("lambda_j round trip and image on S_4 under every order") {
  for (const auto& o : all_permutations(4)) {
    const TotalOrder order(o.images());
    for (int g = 0; g <= 1; ++g)
      for (const auto& w : all_permutations(4)) {
        const auto fs = enumerate_monotone(w, g, order);
        for (int j = 1; j < 4; ++j) {
          std::set<std::vector<Transposition>> image;
          for (const auto& f : fs) {
            const auto h = lambda_j(f, j);
            CHECK(lambda_j_inverse(h, j) == f);
            CHECK(h.order == order.swapped(j));
            image.insert(h.factors);
          }
          CHECK(image.size() == enumerate_monotone(w, g, order.swapped(j)).size());
        }
      }
  }
}

TEST_CASE("lambda_j keeps orbits on S_5") {
  const std::vector<TotalOrder> orders = {TotalOrder::natural(5), TotalOrder::parse("5<4<3<2<1"),
                                          TotalOrder::parse("2<5<1<4<3")};
  for (const auto& order : orders)
    for (const auto& w : all_permutations(5))
      for (const auto& f : enumerate_monotone(w, 0, order))
        for (int j = 1; j < 5; ++j) {
          const auto h = lambda_j(f, j);
          CHECK(orbits(5, std::span<const Transposition>(f.factors)) == orbits(5, std::span<const Transposition>(h.factors)));
        }
}

TEST_CASE("lambda for an order") {
  const auto natural = monotone("(1 2)(1 3)", TotalOrder::natural(3));
  CHECK(lambda_order(natural).factors == natural.factors);
  const auto f = monotone("(1 2)(2 3)", TotalOrder::parse("2<1<3"));
  CHECK(f.target == Permutation::parse("(1 3 2)"));
  const auto h = lambda_order(f);
  CHECK(to_string(h.factors) == "(1 2)(2 3)");
  CHECK(h.order.is_natural());
  CHECK(lambda_order_inverse(h.factors, f.order) == f.factors);
  for (const auto& o : all_permutations(4)) {
    const TotalOrder order(o.images());
    for (const auto& w : all_permutations(4)) {
      std::set<std::vector<Transposition>> image;
      for (const auto& x : enumerate_monotone(w, 1, order)) image.insert(lambda_order(x).factors);
      CHECK(image.size() == enumerate_monotone(w, 1, TotalOrder::natural(4)).size());
    }
  }
}

TEST_CASE("delta") {
  const Permutation w = Permutation::parse("(1 3 2)");
  const Permutation d = Permutation::parse("(1 2)(3)");
  const Permutation v = conjugate(w, d);
  CHECK(v == Permutation::parse("(1 2 3)"));
  const auto fs = enumerate_monotone(w, 0, TotalOrder::natural(3));
  std::set<std::vector<Transposition>> image;
  for (const auto& f : fs) {
    const auto h = delta(f, d);
    CHECK(h.target == v);
    CHECK_FALSE(monotone_violation(h).has_value());
    CHECK(delta_inverse(h, d) == f);
    CHECK(delta(f, Permutation(3)) == f);
    image.insert(h.factors);
  }
  CHECK(image.size() == 2);
  CHECK(enumerate_monotone(v, 0, TotalOrder::natural(3)).size() == 2);
}

TEST_CASE("theta worked example") {
  const MonotoneDoubleFactorisation f{Permutation::parse("(1 2 3)"), parse_transpositions("(1 3)"),
                                      Permutation::parse("(1 2)(3)"), 0};
  const Permutation d = Permutation::parse("(1 3)(2)");
  const auto h = theta(f, d);
  CHECK(h.target == Permutation::parse("(1)(2 3)"));
  CHECK_FALSE(monotone_double_violation(h).has_value());
  CHECK(h.sigma.to_string() == "(1 3 2)");
  CHECK(to_string(h.factors) == "(1 3)");
  CHECK(theta_inverse(h, d) == f);
  CHECK(theta(f, Permutation(3)) == f);
}

TEST_CASE("gamma worked examples") {
  const Permutation w = Permutation::parse("(1 2)(3)");
  const StarFactorisation a{3, 3, {1, 2, 1}, w, 0};
  const auto ga = gamma(a);
  CHECK(ga.sigma.to_string() == "(1 2 3)");
  CHECK(to_string(ga.factors) == "(1 3)");
  const StarFactorisation b{3, 3, {2, 1, 2}, w, 0};
  const auto gb = gamma(b);
  CHECK(gb.sigma.to_string() == "(1 3 2)");
  CHECK(to_string(gb.factors) == "(2 3)");
  CHECK(gamma_inverse(ga) == a);
  CHECK(gamma_inverse(gb) == b);
  const StarFactorisation c{2, 2, {1}, Permutation::parse("(1 2)"), 0};
  const auto gc = gamma(c);
  CHECK(gc.sigma.to_string() == "(1 2)");
  CHECK(gc.factors.empty());
}

TEST_CASE("gamma rejects non-members") {
  const StarFactorisation bad{3, 3, {1, 1}, Permutation::parse("(2 3)"), 0};
  CHECK_THROWS_WITH_AS(gamma(bad), "condition S2' violated: (2 3) never appears", std::invalid_argument);
  const StarFactorisation rooted{3, 1, {2, 3, 2}, Permutation::parse("(1 3)(2)"), 0};
  CHECK_THROWS(gamma(rooted));
}

TEST_CASE("gamma preserves genus and is a bijection on S_4") {
  for (int g = 0; g <= 1; ++g)
    for (const auto& w : all_permutations(4)) {
      std::set<MonotoneDoubleFactorisation> image;
      for (const auto& f : enumerate_star(w, g, 4)) {
        HurwitzMoveTrace trace;
        const auto m = gamma(f, &trace);
        CHECK(m.genus == g);
        CHECK(static_cast<int>(m.factors.size()) == w.cycle_count() - 1 + 2 * g);
        std::vector<Transposition> replayed = f.factors();
        CHECK(trace.replay(replayed));
        image.insert(m);
      }
      const auto mds = enumerate_monotone_double(w, g);
      CHECK(std::vector<MonotoneDoubleFactorisation>(image.begin(), image.end()) == mds);
    }
}

TEST_CASE("reroot") {
  const Permutation w = Permutation::parse("(1 2)(3)");
  std::set<std::vector<int>> image;
  for (const auto& f : enumerate_star(w, 0, 3)) {
    CHECK(reroot(f, 3) == f);
    const auto r = reroot(f, 1);
    CHECK(r.root == 1);
    CHECK_FALSE(star_violation(r).has_value());
    CHECK(reroot(r, 3) == f);
    image.insert(r.legs);
  }
  CHECK(image.size() == 2);
  CHECK(enumerate_star(w, 0, 1).size() == 2);
  for (int g = 0; g <= 1; ++g)
    for (const auto& x : all_permutations(4))
      for (const auto& f : enumerate_star(x, g, 4))
        for (int i = 1; i <= 4; ++i) CHECK(reroot(reroot(f, i), 4) == f);
}

TEST_CASE("centrality witness") {
  const Permutation w = Permutation::parse("(1 2)(3)");
  const Permutation v = Permutation::parse("(1)(2 3)");
  std::set<StarFactorisation> image;
  for (const auto& f : enumerate_star(w, 0, 3)) {
    CHECK(centrality_witness(f, w) == f);
    const auto h = centrality_witness(f, v);
    CHECK(h.target == v);
    CHECK_FALSE(star_violation(h).has_value());
    image.insert(h);
  }
  CHECK(image.size() == 2);
  CHECK_THROWS(centrality_witness(enumerate_star(w, 0, 3).front(), Permutation::parse("(1 2 3)")));
}

TEST_CASE("trace rendering") {
  HurwitzMoveTrace t;
  t.record(2, MoveKind::stage2, {Transposition(1, 2), Transposition(1, 3)}, {Transposition(2, 3), Transposition(1, 2)});
  CHECK(t.render() == "pos=2 move=S2 before=(1 2)(1 3) after=(2 3)(1 2)\n");
  CHECK(move_kind_name(MoveKind::rhm) == "RHM");
  CHECK(move_kind_name(MoveKind::lhm) == "LHM");
  std::vector<Transposition> v = parse_transpositions("(3 4)(1 2)(1 3)");
  CHECK(t.replay(v));
  CHECK(to_string(v) == "(3 4)(2 3)(1 2)");
  std::vector<Transposition> wrong = parse_transpositions("(1 2)(3 4)(1 3)");
  CHECK_FALSE(t.replay(wrong));
}
