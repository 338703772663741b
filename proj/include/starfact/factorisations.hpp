#pragma once

// The four factorisation families, their membership checks, exhaustive
// listers, and counting passes.
//
// Listing and counting are deliberately separate paths. Listers walk every
// transposition sequence (with distance pruning) and are meant for small
// degrees; counters run dense dynamic programmes over S_n and scale to n = 6.

#include "starfact/bigint.hpp"
#include "starfact/permutation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace starfact {

/// (a_1 r)(a_2 r)...(a_m r) = target, transitive, with m = n + c(target) - 2 + 2g.
struct StarFactorisation {
  int n = 1;
  int root = 1;
  std::vector<int> legs;
  Permutation target;
  int genus = 0;

  std::vector<Transposition> factors() const;
  bool operator==(const StarFactorisation&) const = default;
  auto operator<=>(const StarFactorisation& o) const { return legs <=> o.legs; }
};

/// Transpositions whose order-larger symbols weakly increase along `order`.
struct MonotoneFactorisation {
  TotalOrder order = TotalOrder::natural(1);
  std::vector<Transposition> factors;
  Permutation target;
  int genus = 0;

  int degree() const { return order.size(); }
  bool operator==(const MonotoneFactorisation&) const = default;
};

/// sigma * (natural-order monotone tail) = target, sigma a full cycle.
struct MonotoneDoubleFactorisation {
  Permutation sigma;
  std::vector<Transposition> factors;
  Permutation target;
  int genus = 0;

  int degree() const { return sigma.degree(); }
  bool operator==(const MonotoneDoubleFactorisation&) const = default;
  auto operator<=>(const MonotoneDoubleFactorisation& o) const {
    if (auto c = sigma <=> o.sigma; c != 0) return c;
    return factors <=> o.factors;
  }
};

// Lengths implied by a target and a genus.
inline int star_length(int n, const Permutation& target, int genus) {
  return n + target.cycle_count() - 2 + 2 * genus;
}
inline int monotone_length(int n, const Permutation& target, int genus) {
  return n - target.cycle_count() + 2 * genus;
}
inline int monotone_double_length(const Permutation& target, int genus) {
  return target.cycle_count() - 1 + 2 * genus;
}

/// Genus g with length = n - c(product) + 2g, or nullopt when no integer
/// g >= 0 fits.
std::optional<int> monotone_genus_of(int n, const Permutation& product, int length);

// Membership checks. Each returns the first violated condition as a message
// naming it (S1, S2', H0, H1, H2, product), or nullopt when the object is a
// member of its family.
std::optional<std::string> star_violation(int n, int root, const std::vector<int>& legs,
                                          const Permutation& target, int genus);
std::optional<std::string> star_violation(const StarFactorisation& f);
std::optional<std::string> monotone_violation(const MonotoneFactorisation& f);
std::optional<std::string> monotone_double_violation(const MonotoneDoubleFactorisation& f);

/// True when the order-larger symbols of `factors` weakly increase.
bool is_monotone(const std::vector<Transposition>& factors, const TotalOrder& order);

// ---------------------------------------------------------------------------
// Listing

/// All transitive star factorisations with the given root, legs in
/// lexicographic order. Empty for negative genus; throws for a root outside [n].
std::vector<StarFactorisation> enumerate_star(const Permutation& target, int genus, int root);

/// All monotone factorisations relative to `order`, factor sequences in
/// lexicographic order.
std::vector<MonotoneFactorisation> enumerate_monotone(const Permutation& target, int genus,
                                                      const TotalOrder& order);

/// All length-`length` monotone transposition sequences (relative to `order`)
/// with product `target`; no genus bookkeeping.
std::vector<std::vector<Transposition>> list_monotone_sequences(const Permutation& target,
                                                                int length, const TotalOrder& order);

/// All monotone double Hurwitz factorisations, ordered by sigma's image
/// sequence, then by tail.
std::vector<MonotoneDoubleFactorisation> enumerate_monotone_double(const Permutation& target,
                                                                   int genus);

/// The unique (j_1 i_1)...(j_k i_k), j_t < i_t, i_1 < ... < i_k, with
/// product `target`. Also checks that the factors have the orbits of `target`.
std::vector<Transposition> strictly_monotone_factorisation(const Permutation& target);

// ---------------------------------------------------------------------------
// Counting

/// |A_g(target)| with the given root, by dynamic programming over
/// (prefix product, set of legs used).
Integer count_star(const Permutation& target, int genus, int root);

/// Length-`length` star products with the given root equal to `target`,
/// without the transitivity condition.
Integer count_star_unconstrained(const Permutation& target, int length, int root);

/// For each length 0..max_length, counts of star sequences over all targets,
/// indexed by `PermTable` rank. `transitive` keeps only sequences using every leg.
std::vector<std::vector<Integer>> star_count_layers(int n, int root, int max_length, bool transitive);

/// |M_g(target)| relative to `order`, by dynamic programming over
/// (prefix product, current largest symbol).
Integer count_monotone(const Permutation& target, int genus, const TotalOrder& order);

/// For each length 0..max_length, counts of monotone sequences (relative to
/// `order`) started at each seed: result[len][i] = sum over seeds s of the
/// number of length-len sequences with s * product = perm i.
std::vector<std::vector<Integer>> monotone_count_layers(const std::vector<Integer>& seeds,
                                                        const TotalOrder& order, int max_length);

/// |MD_g(target)|: monotone counting seeded by every full cycle.
Integer count_monotone_double(const Permutation& target, int genus);

/// |H^g_{alpha,beta}|: sigma in C_alpha, m = l(alpha) + l(beta) - 2 + 2g
/// arbitrary transpositions, product in C_beta, sigma and factors transitive.
/// Counted by a pass over (product, orbit partition) states.
Integer count_double_hurwitz(const Partition& alpha, const Partition& beta, int genus);

/// b_g(beta) := |H^g_{(n),beta}| / |C_beta|; throws std::logic_error if the
/// division is not exact.
Integer double_hurwitz_b(const Partition& beta, int genus);

} // namespace starfact
