#include "starfact/symfunc.hpp"

#include <functional>
#include <sstream>

namespace starfact {

Polynomial Polynomial::constant(int n, const Integer& c) {
  Polynomial out(n);
  out.add_term(Exponents(static_cast<std::size_t>(std::max(n - 1, 0)), 0), c);
  return out;
}

Polynomial Polynomial::variable_power(int n, int s, int power) {
  if (s < 1 || s > n) throw std::invalid_argument("variable x" + std::to_string(s) + " outside [1, " + std::to_string(n) + "]");
  if (power < 0) throw std::invalid_argument("negative exponent");
  if (power == 0) return constant(n, 1);
  Polynomial out(n);
  if (s == 1) return out;
  Exponents e(static_cast<std::size_t>(n - 1), 0);
  e[s - 2] = power;
  out.add_term(e, 1);
  return out;
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("polynomial degree mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("polynomial degree mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("polynomial degree mismatch");
  Polynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial out = constant(n_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer a = c;
    if (!first) out << (a < 0 ? " - " : " + ");
    else if (a < 0) out << "-";
    if (a < 0) a = -a;
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 2);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out << a;
    else if (a == 1) out << mono;
    else out << a << "*" << mono;
  }
  return out.str();
}

std::string SymmetricFunction::to_string() const {
  const char* name = basis == SymmetricBasis::e ? "e" : basis == SymmetricBasis::h ? "h" : "p";
  return name + shape.to_string();
}

Polynomial elementary(int n, int k) {
  const int vars = n - 1;
  Polynomial out(n);
  if (k < 0 || k > vars) return out;
  Exponents e(static_cast<std::size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      out.add_term(e, 1);
      return;
    }
    for (int i = from; i <= vars - left; ++i) {
      e[i] = 1;
      rec(i + 1, left - 1);
      e[i] = 0;
    }
  };
  rec(0, k);
  return out;
}

Polynomial complete(int n, int k) {
  const int vars = n - 1;
  Polynomial out(n);
  if (k < 0) return out;
  if (k == 0) return Polynomial::constant(n, 1);
  if (vars == 0) return out;
  Exponents e(static_cast<std::size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == vars - 1) {
      e[i] = left;
      out.add_term(e, 1);
      e[i] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(0, k);
  return out;
}

Polynomial power_sum(int n, int k) {
  if (k < 0) return Polynomial(n);
  if (k == 0) return Polynomial::constant(n, n - 1);
  Polynomial out(n);
  for (int s = 2; s <= n; ++s) out += Polynomial::variable_power(n, s, k);
  return out;
}

Polynomial expand(const SymmetricFunction& f, int n) {
  Polynomial out = Polynomial::constant(n, 1);
  for (int part : f.shape.parts()) {
    switch (f.basis) {
      case SymmetricBasis::e: out = out * elementary(n, part); break;
      case SymmetricBasis::h: out = out * complete(n, part); break;
      case SymmetricBasis::p: out = out * power_sum(n, part); break;
    }
  }
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_part) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    out.emplace_back(parts);
    for (int p = std::min(left, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(max_size, max_part);
  return out;
}

} // namespace starfact
