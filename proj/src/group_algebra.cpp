#include "starfact/group_algebra.hpp"

#include "starfact/detail/packed_partition.hpp"
#include "starfact/perm_table.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace starfact {

namespace {

void require_same_degree(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("group algebra degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
}

using Dense = std::vector<Integer>;

AlgebraElement from_dense(int n, const Dense& v) {
  const PermTable& table = PermTable::get(n);
  AlgebraElement out(n);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.add_term(table.at(static_cast<PermTable::Index>(i)), v[i]);
  return out;
}

// Cycle type of every permutation of degree n, by table index; built once.
const std::vector<Partition>& class_of_index(int n) {
  static std::array<std::unique_ptr<std::vector<Partition>>, PermTable::kMaxTableDegree + 1> cache;
  static std::array<std::once_flag, PermTable::kMaxTableDegree + 1> flags;
  const PermTable& table = PermTable::get(n);
  std::call_once(flags[n], [&] {
    auto v = std::make_unique<std::vector<Partition>>();
    v->reserve(table.size());
    for (const auto& p : table.perms()) v->push_back(p.cycle_type());
    cache[n] = std::move(v);
  });
  return *cache[n];
}

// v * J_s^power, in place.
void times_jm_power(Dense& v, const PermTable& table, int s, int power) {
  for (int step = 0; step < power; ++step) {
    Dense next(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      for (int a = 1; a < s; ++a) next[table.times_transposition(static_cast<PermTable::Index>(i), a, s)] += v[i];
    }
    v = std::move(next);
  }
}

// States of the transitivity pass: (product index, orbit partition) -> count.
struct StateKey {
  PermTable::Index perm;
  detail::PackedPartition orbits;
  bool operator==(const StateKey&) const = default;
};
struct StateHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.orbits * 0x9E3779B97F4A7C15ull ^ k.perm);
  }
};
using StateMap = std::unordered_map<StateKey, Integer, StateHash>;

StateMap advance(const StateMap& from, const PermTable& table, int n, const Exponents& e, const Integer& c) {
  StateMap cur;
  cur.reserve(from.size());
  for (const auto& [k, v] : from) cur.emplace(k, v * c);
  for (int s = 2; s <= n; ++s) {
    for (int step = 0; step < e[s - 2]; ++step) {
      StateMap next;
      next.reserve(cur.size() * 2);
      for (const auto& [k, v] : cur)
        for (int a = 1; a < s; ++a)
          next[{table.times_transposition(k.perm, a, s), detail::packed_join(k.orbits, n, a - 1, s - 1)}] += v;
      cur = std::move(next);
    }
  }
  return cur;
}

} // namespace

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::identity(int n) { return of(Permutation(n)); }

AlgebraElement AlgebraElement::of(const Permutation& p, const Integer& c) {
  AlgebraElement out(p.degree());
  out.add_term(p, c);
  return out;
}

Integer AlgebraElement::coefficient_of(const Permutation& p) const {
  if (p.degree() != n_) throw std::invalid_argument("coefficient_of: degree mismatch");
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void AlgebraElement::add_term(const Permutation& p, const Integer& c) {
  if (p.degree() != n_) throw std::invalid_argument("add_term: degree mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_degree(*this, o);
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_degree(*this, o);
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Integer& c) {
  if (c == 0) terms_.clear();
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_degree(a, b);
  const int n = a.degree();
  AlgebraElement out(n);
  if (a.is_zero() || b.is_zero()) return out;

  std::vector<kernels::PermWord> rhs;
  std::vector<const Integer*> rhs_coeff;
  rhs.reserve(b.terms().size());
  for (const auto& [q, c] : b.terms()) {
    rhs.push_back(q.word());
    rhs_coeff.push_back(&c);
  }
  std::vector<kernels::PermWord> prod(rhs.size());

  if (n <= PermTable::kMaxTableDegree) {
    const PermTable& table = PermTable::get(n);
    Dense acc(table.size());
    for (const auto& [p, c] : a.terms()) {
      kernels::left_multiply(p.word(), rhs, prod);
      for (std::size_t k = 0; k < prod.size(); ++k)
        acc[lex_rank(Permutation::from_word(n, prod[k]))] += c * *rhs_coeff[k];
    }
    return from_dense(n, acc);
  }
  for (const auto& [p, c] : a.terms()) {
    kernels::left_multiply(p.word(), rhs, prod);
    for (std::size_t k = 0; k < prod.size(); ++k) out.add_term(Permutation::from_word(n, prod[k]), c * *rhs_coeff[k]);
  }
  return out;
}

AlgebraElement AlgebraElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  AlgebraElement out = identity(n_);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Integer a = c;
    if (!first) out << (a < 0 ? " - " : " + ");
    else if (a < 0) out << "-";
    if (a < 0) a = -a;
    first = false;
    out << a << "*" << p.to_string();
  }
  return out.str();
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
Integer coefficient_of(const Permutation& p, const AlgebraElement& x) { return x.coefficient_of(p); }

AlgebraElement jm_element(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("J_" + std::to_string(k) + " undefined in degree " + std::to_string(n));
  AlgebraElement out(n);
  for (int j = 1; j < k; ++j) out.add_term(Permutation::transposition(n, j, k), 1);
  return out;
}

AlgebraElement class_sum(const Partition& lambda) {
  const int n = lambda.size();
  if (n < 1) throw std::invalid_argument("class sums need a nonempty partition");
  AlgebraElement out(n);
  const PermTable& table = PermTable::get(n);
  const auto& classes = class_of_index(n);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (classes[i] == lambda) out.add_term(table.at(static_cast<PermTable::Index>(i)), 1);
  return out;
}

NotCentral::NotCentral(CentralityWitness w)
    : std::runtime_error("not central: [" + w.first.to_string() + "] = " + w.first_coefficient.str() + " but [" +
                         w.second.to_string() + "] = " + w.second_coefficient.str()),
      witness_(std::move(w)) {}

std::optional<CentralityWitness> centrality_failure(const AlgebraElement& x) {
  const int n = x.degree();
  const PermTable& table = PermTable::get(n);
  const auto& classes = class_of_index(n);
  std::map<Partition, std::pair<PermTable::Index, Integer>> seen;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto idx = static_cast<PermTable::Index>(i);
    const Integer c = x.coefficient_of(table.at(idx));
    auto [it, inserted] = seen.try_emplace(classes[i], idx, c);
    if (!inserted && it->second.second != c)
      return CentralityWitness{table.at(it->second.first), it->second.second, table.at(idx), c};
  }
  return std::nullopt;
}

bool is_central(const AlgebraElement& x) { return !centrality_failure(x).has_value(); }

ClassSumDecomposition decompose(const AlgebraElement& x) {
  if (auto w = centrality_failure(x)) throw NotCentral(*w);
  ClassSumDecomposition out;
  for (const auto& [p, c] : x.terms()) out.try_emplace(p.cycle_type(), c);
  return out;
}

AlgebraElement recompose(int n, const ClassSumDecomposition& d) {
  AlgebraElement out(n);
  for (const auto& [lambda, c] : d) out += class_sum(lambda) * c;
  return out;
}

std::vector<Partition> ordered_classes(const ClassSumDecomposition& d) {
  std::vector<Partition> keys;
  for (const auto& [lambda, c] : d)
    if (c != 0) keys.push_back(lambda);
  std::sort(keys.begin(), keys.end(), [](const Partition& a, const Partition& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.parts() > b.parts();
  });
  return keys;
}

std::string render_decomposition(const ClassSumDecomposition& d) {
  const auto keys = ordered_classes(d);
  if (keys.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& lambda : keys) {
    Integer c = d.at(lambda);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    if (c < 0) c = -c;
    first = false;
    out << c << "*K" << lambda.to_string();
  }
  return out.str();
}

// ---------------------------------------------------------------------------

AlgebraElement evaluate(const Polynomial& f) {
  const int n = f.degree_n();
  const PermTable& table = PermTable::get(n);
  Dense total(table.size());
  for (const auto& [e, c] : f.terms()) {
    Dense v(table.size());
    v[table.identity_index()] = c;
    for (int s = 2; s <= n; ++s) times_jm_power(v, table, s, e[s - 2]);
    for (std::size_t i = 0; i < v.size(); ++i) total[i] += v[i];
  }
  return from_dense(n, total);
}

AlgebraElement evaluate(const SymmetricFunction& f, int n) { return evaluate(expand(f, n)); }

AlgebraElement transitive_evaluate_product(const std::vector<Polynomial>& factors) {
  if (factors.empty()) throw std::invalid_argument("transitive_evaluate_product needs at least one factor");
  const int n = factors.front().degree_n();
  const PermTable& table = PermTable::get(n);
  StateMap states;
  states[{table.identity_index(), detail::packed_singletons(n)}] = 1;
  for (const auto& f : factors) {
    if (f.degree_n() != n) throw std::invalid_argument("factor degree mismatch");
    StateMap next;
    for (const auto& [e, c] : f.terms())
      for (auto& [k, v] : advance(states, table, n, e, c)) next[k] += v;
    states = std::move(next);
  }
  Dense total(table.size());
  for (const auto& [k, v] : states)
    if (detail::packed_is_single_block(k.orbits)) total[k.perm] += v;
  return from_dense(n, total);
}

AlgebraElement transitive_evaluate(const Polynomial& f) { return transitive_evaluate_product({f}); }

AlgebraElement transitive_evaluate(const SymmetricFunction& f, int n) { return transitive_evaluate(expand(f, n)); }

AlgebraElement transitive_power(int n, int t) { return transitive_evaluate(Polynomial::variable_power(n, n, t)); }

TransitivePowerReport check_transitive_power_identity(int n, int k) {
  if (n < 2 || k < 0) throw std::invalid_argument("need n >= 2 and k >= 0");
  TransitivePowerReport r;
  r.transitive_jm_power = transitive_power(n, n - 1 + k);
  r.transitive_power_sum = transitive_evaluate(power_sum(n, n - 1 + k));
  Polynomial rhs = complete(n, k);
  for (int s = 2; s <= n; ++s) rhs = rhs * Polynomial::variable_power(n, s, 1);
  r.product_form = evaluate(rhs);
  r.jm_form_holds = r.transitive_jm_power == r.product_form;
  r.power_sum_form_holds = r.transitive_power_sum == r.product_form;
  return r;
}

int span_dimension(const std::vector<AlgebraElement>& elements) {
  // Fraction-free row reduction over the union of supports.
  std::map<Permutation, std::size_t> column;
  for (const auto& x : elements)
    for (const auto& [p, c] : x.terms()) column.try_emplace(p, column.size());
  std::vector<std::vector<Integer>> rows;
  for (const auto& x : elements) {
    std::vector<Integer> row(column.size());
    for (const auto& [p, c] : x.terms()) row[column[p]] = c;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  const std::size_t cols = column.size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Integer a = pr[col];
      const Integer b = rows[r][col];
      Integer g = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        rows[r][c] = rows[r][c] * a - pr[c] * b;
        g = boost::multiprecision::gcd(g, rows[r][c]);
      }
      if (g > 1)
        for (auto& v : rows[r]) v /= g;
    }
    ++rank;
  }
  return rank;
}

} // namespace starfact
