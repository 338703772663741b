#include "starfact/perm_table.hpp"

#include <array>
#include <mutex>

namespace starfact {

std::uint32_t lex_rank(const Permutation& p) {
  const int n = p.degree();
  std::uint32_t rank = 0;
  std::uint32_t used = 0;
  const auto& w = p.word();
  for (int i = 0; i < n; ++i) {
    const unsigned v = w.img[i];
    const unsigned smaller_unused = static_cast<unsigned>(__builtin_popcount(~used & ((1u << v) - 1)));
    rank = rank * static_cast<std::uint32_t>(n - i) + smaller_unused;
    used |= 1u << v;
  }
  return rank;
}

PermTable::PermTable(int n) : n_(n), perms_(all_permutations(n)) {
  const std::size_t total = perms_.size();
  std::vector<kernels::PermWord> words(total);
  for (std::size_t i = 0; i < total; ++i) words[i] = perms_[i].word();
  std::vector<kernels::PermWord> prod(total);
  right_tau_.resize(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int b = 2; b <= n; ++b) {
    for (int a = 1; a < b; ++a) {
      kernels::right_multiply(words, Permutation::transposition(n, a, b).word(), prod);
      auto& map = right_tau_[tau_slot(a, b)];
      map.resize(total);
      for (std::size_t i = 0; i < total; ++i) map[i] = lex_rank(Permutation::from_word(n, prod[i]));
    }
  }
}

const PermTable& PermTable::get(int n) {
  if (n < 1 || n > kMaxTableDegree)
    throw std::invalid_argument("dense tables support degree 1.." + std::to_string(kMaxTableDegree));
  static std::array<std::unique_ptr<PermTable>, kMaxTableDegree + 1> tables;
  static std::array<std::once_flag, kMaxTableDegree + 1> flags;
  std::call_once(flags[n], [n] { tables[n] = std::make_unique<PermTable>(n); });
  return *tables[n];
}

PermTable::Index PermTable::index_of(const Permutation& p) const {
  if (p.degree() != n_) throw std::invalid_argument("degree mismatch in PermTable");
  return lex_rank(p);
}

std::vector<PermTable::Index> PermTable::right_multiplication_map(const Permutation& q) const {
  std::vector<kernels::PermWord> words(perms_.size());
  for (std::size_t i = 0; i < perms_.size(); ++i) words[i] = perms_[i].word();
  kernels::right_multiply(words, q.word(), words);
  std::vector<Index> map(perms_.size());
  for (std::size_t i = 0; i < perms_.size(); ++i) map[i] = lex_rank(Permutation::from_word(n_, words[i]));
  return map;
}

} // namespace starfact
