#pragma once

// Permutations of [n] = {1, ..., n} and the small combinatorial types built
// around them. Symbols are 1-based in every public signature.
//
// Multiplication is left to right throughout: `p * q` applies p first, then q.

#include "starfact/bigint.hpp"
#include "starfact/kernels/perm_kernels.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace starfact {

inline constexpr int kMaxDegree = kernels::kWordSize;

class Partition;
class TotalOrder;

class Permutation {
 public:
  /// Identity of degree n.
  explicit Permutation(int n = 1);

  /// `images[s-1]` is the image of s.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int n, int a, int b);
  /// The cycle (c_1 c_2 ... c_k) in S_n.
  static Permutation cycle(int n, std::span<const int> entries);
  /// Parses cycle notation such as "(1 2)(3)". When `n` is 0 the degree is the
  /// largest symbol mentioned.
  static Permutation parse(std::string_view text, int n = 0);
  static Permutation from_word(int n, const kernels::PermWord& word) { return Permutation(n, word); }

  int degree() const { return n_; }
  int operator()(int s) const { return word_.img[s - 1] + 1; }
  const kernels::PermWord& word() const { return word_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Cycles including fixed points, each starting at its smallest symbol,
  /// ordered by smallest symbol.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  Partition cycle_type() const;

  /// Canonical cycle notation with fixed points, e.g. "(1 2)(3)".
  std::string to_string() const;
  std::vector<int> images() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  Permutation(int n, const kernels::PermWord& w) : word_(w), n_(static_cast<std::uint8_t>(n)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

  kernels::PermWord word_;
  std::uint8_t n_;
};

/// Apply p first, then q. Throws `std::invalid_argument` on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// `by * p * by^-1` (left to right). The result is p with every symbol s
/// renamed to by^-1(s); cycle type is preserved.
Permutation conjugate(const Permutation& p, const Permutation& by);

/// All permutations of degree n in lexicographic order of image sequences.
std::vector<Permutation> all_permutations(int n);

/// Unordered pair {a, b}, a != b. Which symbol is written first is a property
/// of a `TotalOrder`, not of the transposition.
class Transposition {
 public:
  Transposition(int a, int b);

  int low() const { return lo_; }
  int high() const { return hi_; }
  bool contains(int s) const { return s == lo_ || s == hi_; }
  bool disjoint(const Transposition& t) const { return !contains(t.lo_) && !contains(t.hi_); }
  /// The other symbol; `s` must be one of the pair.
  int other(int s) const { return s == lo_ ? hi_ : lo_; }

  int smaller(const TotalOrder& order) const;
  int larger(const TotalOrder& order) const;

  /// Rename both symbols through `rename`.
  Transposition relabel(const Permutation& rename) const { return {rename(lo_), rename(hi_)}; }

  Permutation as_permutation(int n) const { return Permutation::transposition(n, lo_, hi_); }

  std::string to_string() const;
  std::string to_string(const TotalOrder& order) const;

  auto operator<=>(const Transposition&) const = default;

 private:
  int lo_;
  int hi_;
};

/// `t` conjugated by `by` in the sense of `conjugate`.
Transposition conjugate(const Transposition& t, const Permutation& by);

/// Product t_1 * t_2 * ... in S_n (identity for an empty sequence).
Permutation product(int n, std::span<const Transposition> factors);

/// Parses "(1 2)(2 3)" as a sequence of transpositions.
std::vector<Transposition> parse_transpositions(std::string_view text);
std::string to_string(std::span<const Transposition> factors);
std::string to_string(std::span<const Transposition> factors, const TotalOrder& order);

/// Weakly decreasing sequence of positive parts; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  /// Sorts `parts`; throws on a nonpositive part.
  explicit Partition(std::vector<int> parts);
  static Partition parse(std::string_view text);
  /// (1^n)
  static Partition ones(int n);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// lambda with one more part equal to i.
  Partition with_part(int i) const;
  /// lambda with the part at index t removed.
  Partition without_index(std::size_t t) const;
  Partition merged(const Partition& other) const;

  /// Number of permutations of cycle type lambda in S_|lambda|.
  Integer class_size() const;
  /// A fixed permutation of this cycle type: cycles on consecutive symbols.
  Permutation representative() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, largest first in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// A linear order i_1 < i_2 < ... < i_n on [n].
class TotalOrder {
 public:
  /// `sequence[k]` is the symbol of rank k; throws unless it lists 1..n once each.
  explicit TotalOrder(std::vector<int> sequence);
  static TotalOrder natural(int n);
  /// Parses "3<2<1".
  static TotalOrder parse(std::string_view text);

  int size() const { return static_cast<int>(seq_.size()); }
  int rank(int s) const { return rank_[s - 1]; }
  int at(int r) const { return seq_[r]; }
  bool less(int a, int b) const { return rank(a) < rank(b); }
  const std::vector<int>& sequence() const { return seq_; }
  bool is_natural() const;

  /// The order with the symbols of ranks j-1 and j (1-based j) exchanged.
  TotalOrder swapped(int j) const;

  std::string to_string() const;

  bool operator==(const TotalOrder& o) const { return seq_ == o.seq_; }

 private:
  std::vector<int> seq_;
  std::vector<int> rank_;
};

/// delta^-1(1) < delta^-1(2) < ... < delta^-1(n).
TotalOrder order_from_conjugator(const Permutation& delta);

/// Adjacent-swap indices j_1, ..., j_r (1-based) such that swapping ranks
/// j and j+1 in this sequence carries the natural order to `target`.
/// Produced by bubble sort, so it is deterministic and of minimal length.
std::vector<int> simple_reflection_decomposition(const TotalOrder& target);

/// A set partition of [n].
class OrbitPartition {
 public:
  /// `labels[s-1]` names the block of s; blocks are renumbered canonically.
  explicit OrbitPartition(std::span<const int> labels);
  static OrbitPartition singletons(int n);

  int degree() const { return static_cast<int>(label_.size()); }
  int block_of(int s) const { return label_[s - 1]; }
  int block_count() const { return blocks_; }
  bool is_transitive() const { return blocks_ == 1; }
  std::vector<std::vector<int>> blocks() const;

  /// Merge the blocks of a and b.
  OrbitPartition joined(int a, int b) const;

  /// 4 bits per symbol; a dense key for hashing.
  std::uint64_t key() const;

  std::string to_string() const;

  auto operator<=>(const OrbitPartition&) const = default;

 private:
  std::vector<int> label_;
  int blocks_ = 0;
};

/// Orbits of the subgroup generated by `generators` acting on [n].
OrbitPartition orbits(int n, std::span<const Permutation> generators);
OrbitPartition orbits(int n, std::span<const Transposition> generators);

enum class JoinCut { join, cut };

/// Join when the symbols of `t` lie in different cycles of `nu`, else cut.
JoinCut join_cut(const Permutation& nu, const Transposition& t);

} // namespace starfact

template <>
struct std::hash<starfact::Permutation> {
  std::size_t operator()(const starfact::Permutation& p) const noexcept;
};
