#pragma once

// Hurwitz moves and the bijections built from them:
//
//   lambda_j        monotone under an order  ->  monotone under the order with
//                   ranks j-1, j exchanged
//   lambda_order    monotone under any order ->  monotone under the natural order
//   delta           relabel a monotone factorisation onto a conjugate target
//   theta           the same for monotone double factorisations
//   gamma           star factorisations     <->  monotone double factorisations
//   reroot          change the root of a star factorisation
//   centrality_witness  star factorisations of a permutation -> of a conjugate
//
// Every function optionally appends the moves it performs to a trace.

#include "starfact/factorisations.hpp"
#include "starfact/permutation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace starfact {

using TranspositionPair = std::pair<Transposition, Transposition>;

/// tau sigma -> sigma^tau tau
TranspositionPair rhm(const TranspositionPair& pair);
/// tau sigma -> sigma tau^sigma
TranspositionPair lhm(const TranspositionPair& pair);

enum class MoveKind { rhm, lhm, stage2 };

struct MoveStep {
  int position = 0;  // 1-based position of the left factor of the pair
  MoveKind kind = MoveKind::rhm;
  TranspositionPair before;
  TranspositionPair after;
};

class HurwitzMoveTrace {
 public:
  void record(int position, MoveKind kind, const TranspositionPair& before, const TranspositionPair& after) {
    steps_.push_back({position, kind, before, after});
  }
  const std::vector<MoveStep>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }

  /// Applies every step to `factors`, checking that each step's `before` pair
  /// is what sits at its position. Returns false on any mismatch or on a step
  /// that changes the product of its pair.
  bool replay(std::vector<Transposition>& factors) const;

  /// One "pos=<k> move=<RHM|LHM|S2> before=(..)(..) after=(..)(..)" line per step.
  std::string render() const;

  /// Shift every position by `offset`, used when a trace of a subsequence is
  /// spliced into the trace of a longer one.
  void append(const HurwitzMoveTrace& other, int offset);

 private:
  std::vector<MoveStep> steps_;
};

std::string move_kind_name(MoveKind kind);

// ---------------------------------------------------------------------------
// Order exchange

/// Maps factors monotone under `order` to factors monotone under
/// order.swapped(j), with the same product. Throws std::invalid_argument when
/// the input is not monotone under `order` or j is out of range.
std::vector<Transposition> lambda_j(const std::vector<Transposition>& factors, const TotalOrder& order,
                                    int j, HurwitzMoveTrace* trace = nullptr);

/// Inverse of lambda_j: `factors` monotone under order.swapped(j) are mapped
/// back to factors monotone under `order`.
std::vector<Transposition> lambda_j_inverse(const std::vector<Transposition>& factors, const TotalOrder& order,
                                            int j, HurwitzMoveTrace* trace = nullptr);

MonotoneFactorisation lambda_j(const MonotoneFactorisation& f, int j, HurwitzMoveTrace* trace = nullptr);
/// `f` is monotone under some order O; the result is monotone under the
/// order P with P.swapped(j) == O.
MonotoneFactorisation lambda_j_inverse(const MonotoneFactorisation& f, int j, HurwitzMoveTrace* trace = nullptr);

/// The adjacent exchanges (applied left to right) taking `order` to the
/// natural order: the bubble-sort sequence.
std::vector<int> sorting_sequence(const TotalOrder& order);

/// Factors monotone under `order` -> factors monotone under the natural order.
std::vector<Transposition> lambda_order(const std::vector<Transposition>& factors, const TotalOrder& order,
                                        HurwitzMoveTrace* trace = nullptr);
/// Factors monotone under the natural order -> factors monotone under `order`.
std::vector<Transposition> lambda_order_inverse(const std::vector<Transposition>& factors, const TotalOrder& order,
                                                HurwitzMoveTrace* trace = nullptr);

MonotoneFactorisation lambda_order(const MonotoneFactorisation& f, HurwitzMoveTrace* trace = nullptr);

// ---------------------------------------------------------------------------
// Relabelling onto a conjugate

/// f monotone under the natural order, target w -> natural-order monotone
/// factorisation of conjugate(w, delta).
MonotoneFactorisation delta(const MonotoneFactorisation& f, const Permutation& by,
                            HurwitzMoveTrace* trace = nullptr);
MonotoneFactorisation delta_inverse(const MonotoneFactorisation& f, const Permutation& by,
                                    HurwitzMoveTrace* trace = nullptr);

MonotoneDoubleFactorisation theta(const MonotoneDoubleFactorisation& f, const Permutation& by,
                                  HurwitzMoveTrace* trace = nullptr);
MonotoneDoubleFactorisation theta_inverse(const MonotoneDoubleFactorisation& f, const Permutation& by,
                                          HurwitzMoveTrace* trace = nullptr);

// ---------------------------------------------------------------------------
// Star <-> monotone double

/// Requires root n. Throws std::invalid_argument naming the violated
/// condition when f is not a transitive star factorisation.
MonotoneDoubleFactorisation gamma(const StarFactorisation& f, HurwitzMoveTrace* trace = nullptr);
StarFactorisation gamma_inverse(const MonotoneDoubleFactorisation& f, HurwitzMoveTrace* trace = nullptr);

/// The same construction with the root of `f` in place of n.
MonotoneDoubleFactorisation gamma_rooted(const StarFactorisation& f, HurwitzMoveTrace* trace = nullptr);
/// Rebuilds a star factorisation with the given root.
StarFactorisation gamma_inverse_rooted(const MonotoneDoubleFactorisation& f, int root,
                                       HurwitzMoveTrace* trace = nullptr);

/// Star factorisation of the same target with root `root`.
StarFactorisation reroot(const StarFactorisation& f, int root, HurwitzMoveTrace* trace = nullptr);

/// A permutation d with conjugate(from, d) == to, chosen canonically by
/// matching the cycles of both in canonical order. Throws when the two are
/// not conjugate.
Permutation conjugator(const Permutation& from, const Permutation& to);

/// Star factorisation (root n) of `to`, conjugate to f.target, via gamma,
/// theta and gamma_inverse.
StarFactorisation centrality_witness(const StarFactorisation& f, const Permutation& to,
                                     HurwitzMoveTrace* trace = nullptr);

} // namespace starfact
