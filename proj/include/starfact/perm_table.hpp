#pragma once

#include "starfact/permutation.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace starfact {

/// Dense indexing of S_n for the counting passes: every permutation gets its
/// lexicographic rank, and right multiplication by each transposition becomes
/// a precomputed index map.
class PermTable {
 public:
  using Index = std::uint32_t;

  static constexpr int kMaxTableDegree = 9;

  /// Shared per-degree instance; throws for n > kMaxTableDegree.
  static const PermTable& get(int n);

  explicit PermTable(int n);

  int degree() const { return n_; }
  std::size_t size() const { return perms_.size(); }
  const Permutation& at(Index i) const { return perms_[i]; }
  const std::vector<Permutation>& perms() const { return perms_; }

  Index index_of(const Permutation& p) const;
  Index identity_index() const { return 0; }

  /// Index of at(i) * (a b); a < b.
  Index times_transposition(Index i, int a, int b) const {
    return right_tau_[tau_slot(a, b)][i];
  }
  const std::vector<Index>& right_transposition_map(int a, int b) const {
    return right_tau_[tau_slot(a, b)];
  }

  /// Index map of right multiplication by an arbitrary permutation.
  std::vector<Index> right_multiplication_map(const Permutation& q) const;

  static int tau_slot(int a, int b) { return (b - 1) * (b - 2) / 2 + (a - 1); }

 private:
  int n_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<Index>> right_tau_;
};

/// Lexicographic rank of p among all permutations of its degree.
std::uint32_t lex_rank(const Permutation& p);

} // namespace starfact
