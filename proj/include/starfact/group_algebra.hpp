#pragma once

// Exact arithmetic in the integral group algebra of S_n.

#include "starfact/bigint.hpp"
#include "starfact/permutation.hpp"
#include "starfact/symfunc.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starfact {

class AlgebraElement {
 public:
  explicit AlgebraElement(int n = 1) : n_(n) {}
  static AlgebraElement identity(int n);
  static AlgebraElement of(const Permutation& p, const Integer& c = 1);

  int degree() const { return n_; }
  const std::map<Permutation, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient_of(const Permutation& p) const;
  void add_term(const Permutation& p, const Integer& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Integer& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Integer& c) { return a *= c; }
  /// Convolution under left-to-right composition.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement pow(int k) const;

  bool operator==(const AlgebraElement&) const = default;

  /// "15*(1)(2)(3)(4) + 4*(1 2)(3 4)", terms in permutation order, or "0".
  std::string to_string() const;

 private:
  int n_;
  std::map<Permutation, Integer> terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
Integer coefficient_of(const Permutation& p, const AlgebraElement& x);

/// J_k = (1 k) + ... + (k-1 k); J_1 = 0.
AlgebraElement jm_element(int n, int k);
/// K_lambda, the sum of the conjugacy class of cycle type lambda.
AlgebraElement class_sum(const Partition& lambda);

/// Coordinates in the class-sum basis, keyed by cycle type.
using ClassSumDecomposition = std::map<Partition, Integer>;

/// Two conjugate permutations with different coefficients.
struct CentralityWitness {
  Permutation first;
  Integer first_coefficient;
  Permutation second;
  Integer second_coefficient;
};

class NotCentral : public std::runtime_error {
 public:
  explicit NotCentral(CentralityWitness w);
  const CentralityWitness& witness() const { return witness_; }

 private:
  CentralityWitness witness_;
};

/// nullopt when x is central, otherwise a witness.
std::optional<CentralityWitness> centrality_failure(const AlgebraElement& x);
bool is_central(const AlgebraElement& x);

/// Throws NotCentral when x is not central.
ClassSumDecomposition decompose(const AlgebraElement& x);
AlgebraElement recompose(int n, const ClassSumDecomposition& d);

/// Classes with more parts first, ties by larger parts first, as in
/// "22*K[1,1,1,1] + 8*K[3,1] + 4*K[2,2]"; zero terms omitted; "0" if empty.
std::string render_decomposition(const ClassSumDecomposition& d);
/// Rendering order used above.
std::vector<Partition> ordered_classes(const ClassSumDecomposition& d);

/// f(J_2, ..., J_n) with each monomial evaluated as J_2^a_2 ... J_n^a_n.
AlgebraElement evaluate(const Polynomial& f);
AlgebraElement evaluate(const SymmetricFunction& f, int n);

/// The transitivity operator on the same monomial expansion: of the
/// transposition tuples each ordered monomial expands into, keep those whose
/// transpositions act transitively on [n].
AlgebraElement transitive_evaluate(const Polynomial& f);
AlgebraElement transitive_evaluate(const SymmetricFunction& f, int n);

/// The transitivity operator applied to a product of polynomials expanded
/// factor by factor: every tuple is the concatenation of one tuple from each
/// factor's own monomial expansion, in factor order.
AlgebraElement transitive_evaluate_product(const std::vector<Polynomial>& factors);

/// T_n(J_n^t).
AlgebraElement transitive_power(int n, int t);

/// Both sides of T_n(J_n^{n-1+k}) = J_2 ... J_n h_k(J), and the power-sum
/// form T_n(p_{n-1+k}(J)) of the left side.
struct TransitivePowerReport {
  AlgebraElement transitive_jm_power;   // T_n(J_n^{n-1+k})
  AlgebraElement transitive_power_sum;  // T_n(p_{n-1+k}(J))
  AlgebraElement product_form;          // J_2 ... J_n h_k(J)
  bool jm_form_holds = false;
  bool power_sum_form_holds = false;
  bool holds() const { return jm_form_holds && power_sum_form_holds; }
};

TransitivePowerReport check_transitive_power_identity(int n, int k);

/// Dimension over Q of the span of the given elements.
int span_dimension(const std::vector<AlgebraElement>& elements);

} // namespace starfact
