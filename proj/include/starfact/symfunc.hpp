#pragma once

// Polynomials in the variables x_2, ..., x_n (x_1 is identically zero once
// evaluated at Jucys-Murphy elements, so it is dropped) and the e/h/p
// symmetric functions expanded into them.

#include "starfact/bigint.hpp"
#include "starfact/permutation.hpp"

#include <map>
#include <string>
#include <vector>

namespace starfact {

/// exponents[s - 2] is the power of x_s.
using Exponents = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(int n = 1) : n_(n) {}
  static Polynomial constant(int n, const Integer& c);
  /// x_s^power; x_1 gives the zero polynomial unless power is 0.
  static Polynomial variable_power(int n, int s, int power);

  int degree_n() const { return n_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponents& e, const Integer& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  Polynomial pow(int k) const;

  bool operator==(const Polynomial&) const = default;

  /// "3*x2^2*x3 + x4", or "0".
  std::string to_string() const;

 private:
  int n_;
  std::map<Exponents, Integer> terms_;
};

enum class SymmetricBasis { e, h, p };

/// One basis element e_lambda, h_lambda or p_lambda.
struct SymmetricFunction {
  SymmetricBasis basis = SymmetricBasis::e;
  Partition shape;

  std::string to_string() const;
};

/// Direct expansion over x_2..x_n: subsets for e_k, multisets for h_k,
/// single powers for p_k, multiplied over the parts of the shape.
Polynomial expand(const SymmetricFunction& f, int n);

Polynomial elementary(int n, int k);
Polynomial complete(int n, int k);
Polynomial power_sum(int n, int k);

/// All partitions with |lambda| <= max_size (including the empty one) whose
/// parts are at most max_part.
std::vector<Partition> partitions_up_to(int max_size, int max_part);

} // namespace starfact
