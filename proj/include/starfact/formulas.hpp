#pragma once

// Closed forms and recurrences for star and monotone double counts.

#include "starfact/bigint.hpp"
#include "starfact/permutation.hpp"

#include <optional>
#include <string>

namespace starfact {

/// Stirling numbers of the second kind, S(m,k) = k S(m-1,k) + S(m-1,k-1).
Integer stirling2(int m, int k);
/// Central factorial numbers, T(m,k) = T(m-1,k-1) + k^2 T(m-1,k), T(0,0) = 1.
Integer central_factorial(int m, int k);
Integer catalan(int m);

/// Star count of a permutation of cycle type lambda in genus g from its
/// generating series in f(t) = 2 sinh(t/2) / t. Throws std::logic_error when
/// the value is not an integer.
Integer feray_count(const Partition& lambda, int g);

/// Monotone double count of a full n-cycle: S(2g+n, n-1) / C(n,2).
Integer md_full_cycle(int n, int g);
/// Monotone double count of the identity: (n-1)! Cat(n-1) T(g+n-1, n-1).
Integer md_identity(int n, int g);

/// Star count of any permutation whose symbol n lies in an i-cycle and whose
/// other cycles have lengths alpha, from the join-cut recurrence with
/// a_0(1, empty) = 1. Memoised; safe to call concurrently.
Integer recurrence_star(int i, const Partition& alpha, int g);

struct IdentityRecurrenceCheck {
  Integer lhs;  // n md_g(1^n)
  Integer rhs;  // n(n-1)^2 md_{g-1}(1^n) + 2(n-1)(2n-3) md_g(1^{n-1})
  bool holds() const { return lhs == rhs; }
};
IdentityRecurrenceCheck recurrence_md_identity_check(int n, int g);

inline constexpr int kDefaultRelationBound = 3;

/// b_g(alpha + 1^(n-1)) in S_(2n-1) against n! (2n-1)^(n + l(alpha) + 2g - 3) a_g(alpha).
struct DoubleHurwitzRelationCheck {
  Rational lhs;
  Rational rhs;
  Integer double_hurwitz_count;  // |H^g_{(2n-1), alpha + 1^(n-1)}|
  Integer star_count;            // a_g(alpha)
  bool holds() const { return lhs == rhs; }
};

/// Throws std::out_of_range stating the bound when |alpha| > max_n.
DoubleHurwitzRelationCheck b_relation_check(const Partition& alpha, int g, int max_n = kDefaultRelationBound);

} // namespace starfact
