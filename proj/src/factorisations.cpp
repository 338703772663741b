#include "starfact/factorisations.hpp"

#include "starfact/detail/packed_partition.hpp"
#include "starfact/perm_table.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace starfact {

namespace {

// Minimal number of transpositions taking `from` to `to` by right multiplication.
int transposition_distance(const Permutation& from, const Permutation& to) {
  return from.degree() - (from.inverse() * to).cycle_count();
}

bool reachable(const Permutation& from, const Permutation& to, int steps) {
  const int d = transposition_distance(from, to);
  return d <= steps && (steps - d) % 2 == 0;
}

Permutation swap_values(const Permutation& p, int a, int b) {
  // p * (a b)
  kernels::PermWord w = p.word();
  for (int i = 0; i < p.degree(); ++i) {
    if (w.img[i] == a - 1)
      w.img[i] = static_cast<std::uint8_t>(b - 1);
    else if (w.img[i] == b - 1)
      w.img[i] = static_cast<std::uint8_t>(a - 1);
  }
  return Permutation::from_word(p.degree(), w);
}

std::vector<Permutation> full_cycles(int n) {
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(n))
    if (p.cycle_count() == 1) out.push_back(p);
  return out;
}

} // namespace

std::vector<Transposition> StarFactorisation::factors() const {
  std::vector<Transposition> out;
  out.reserve(legs.size());
  for (int a : legs) out.emplace_back(a, root);
  return out;
}

std::optional<int> monotone_genus_of(int n, const Permutation& product, int length) {
  const int twice = length - n + product.cycle_count();
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

bool is_monotone(const std::vector<Transposition>& factors, const TotalOrder& order) {
  int prev = -1;
  for (const auto& t : factors) {
    if (t.high() > order.size()) return false;
    const int r = order.rank(t.larger(order));
    if (r < prev) return false;
    prev = r;
  }
  return true;
}

std::optional<std::string> star_violation(int n, int root, const std::vector<int>& legs,
                                          const Permutation& target, int genus) {
  if (target.degree() != n) return "target has degree " + std::to_string(target.degree()) + ", expected " + std::to_string(n);
  if (root < 1 || root > n) return "root " + std::to_string(root) + " outside [1, " + std::to_string(n) + "]";
  for (int a : legs)
    if (a < 1 || a > n || a == root)
      return "leg " + std::to_string(a) + " is not a symbol of [" + std::to_string(n) + "] other than the root";
  std::vector<bool> seen(n + 1, false);
  for (int a : legs) seen[a] = true;
  for (int s = 1; s <= n; ++s)
    if (s != root && !seen[s])
      return "condition S2' violated: " + Transposition(s, root).to_string() + " never appears";
  const int m = star_length(n, target, genus);
  if (static_cast<int>(legs.size()) != m)
    return "condition S1 violated: " + std::to_string(legs.size()) + " factors, genus " +
           std::to_string(genus) + " needs " + std::to_string(m);
  std::vector<Transposition> f;
  for (int a : legs) f.emplace_back(a, root);
  const Permutation p = product(n, f);
  if (p != target) return "product " + p.to_string() + " differs from target " + target.to_string();
  return std::nullopt;
}

std::optional<std::string> star_violation(const StarFactorisation& f) {
  return star_violation(f.n, f.root, f.legs, f.target, f.genus);
}

std::optional<std::string> monotone_violation(const MonotoneFactorisation& f) {
  const int n = f.degree();
  if (f.target.degree() != n) return "target degree differs from the order's";
  for (const auto& t : f.factors)
    if (t.high() > n) return "factor " + t.to_string() + " outside [" + std::to_string(n) + "]";
  if (static_cast<int>(f.factors.size()) != monotone_length(n, f.target, f.genus))
    return "condition H1' violated: " + std::to_string(f.factors.size()) + " factors, genus " +
           std::to_string(f.genus) + " needs " + std::to_string(monotone_length(n, f.target, f.genus));
  if (!is_monotone(f.factors, f.order))
    return "condition H2 violated: larger symbols not weakly increasing under " + f.order.to_string();
  const Permutation p = product(n, f.factors);
  if (p != f.target) return "product " + p.to_string() + " differs from target " + f.target.to_string();
  return std::nullopt;
}

std::optional<std::string> monotone_double_violation(const MonotoneDoubleFactorisation& f) {
  const int n = f.degree();
  if (f.target.degree() != n) return "target degree differs from sigma's";
  if (f.sigma.cycle_count() != 1) return "condition H0 violated: " + f.sigma.to_string() + " is not a full cycle";
  for (const auto& t : f.factors)
    if (t.high() > n) return "factor " + t.to_string() + " outside [" + std::to_string(n) + "]";
  const int m = monotone_double_length(f.target, f.genus);
  if (static_cast<int>(f.factors.size()) != m)
    return "condition H1 violated: " + std::to_string(f.factors.size()) + " factors, genus " +
           std::to_string(f.genus) + " needs " + std::to_string(m);
  if (!is_monotone(f.factors, TotalOrder::natural(n)))
    return "condition H2 violated: larger symbols not weakly increasing";
  const Permutation p = f.sigma * product(n, f.factors);
  if (p != f.target) return "product " + p.to_string() + " differs from target " + f.target.to_string();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Listing

std::vector<StarFactorisation> enumerate_star(const Permutation& target, int genus, int root) {
  const int n = target.degree();
  if (root < 1 || root > n) throw std::invalid_argument("root " + std::to_string(root) + " outside [1, " + std::to_string(n) + "]");
  std::vector<StarFactorisation> out;
  if (genus < 0) return out;
  const int m = star_length(n, target, genus);
  std::vector<int> candidates;
  for (int s = 1; s <= n; ++s)
    if (s != root) candidates.push_back(s);
  std::vector<int> legs;
  std::vector<int> uses(n + 1, 0);
  int uncovered = n - 1;

  std::function<void(const Permutation&)> rec = [&](const Permutation& cur) {
    const int left = m - static_cast<int>(legs.size());
    if (left == 0) {
      if (uncovered == 0 && cur == target) out.push_back({n, root, legs, target, genus});
      return;
    }
    if (uncovered > left || !reachable(cur, target, left)) return;
    for (int a : candidates) {
      legs.push_back(a);
      if (uses[a]++ == 0) --uncovered;
      rec(swap_values(cur, a, root));
      if (--uses[a] == 0) ++uncovered;
      legs.pop_back();
    }
  };
  rec(Permutation(n));
  return out;
}

std::vector<std::vector<Transposition>> list_monotone_sequences(const Permutation& target,
                                                                int length, const TotalOrder& order) {
  const int n = target.degree();
  if (order.size() != n) throw std::invalid_argument("order size differs from target degree");
  std::vector<std::vector<Transposition>> out;
  if (length < 0) return out;
  std::vector<Transposition> seq;

  // Candidate factors grouped by the rank of their larger symbol; within a
  // group the lexicographic (low, high) order keeps the output sorted after a
  // final sort.
  std::vector<std::vector<Transposition>> by_rank(n);
  for (int r = 1; r < n; ++r)
    for (int q = 0; q < r; ++q) by_rank[r].emplace_back(order.at(q), order.at(r));

  std::function<void(const Permutation&, int)> rec = [&](const Permutation& cur, int min_rank) {
    const int left = length - static_cast<int>(seq.size());
    if (left == 0) {
      if (cur == target) out.push_back(seq);
      return;
    }
    if (!reachable(cur, target, left)) return;
    for (int r = std::max(min_rank, 1); r < n; ++r) {
      for (const auto& t : by_rank[r]) {
        seq.push_back(t);
        rec(swap_values(cur, t.low(), t.high()), r);
        seq.pop_back();
      }
    }
  };
  rec(Permutation(n), 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonotoneFactorisation> enumerate_monotone(const Permutation& target, int genus,
                                                      const TotalOrder& order) {
  std::vector<MonotoneFactorisation> out;
  if (genus < 0) return out;
  const int m = monotone_length(target.degree(), target, genus);
  for (auto& seq : list_monotone_sequences(target, m, order))
    out.push_back({order, std::move(seq), target, genus});
  return out;
}

std::vector<MonotoneDoubleFactorisation> enumerate_monotone_double(const Permutation& target,
                                                                   int genus) {
  std::vector<MonotoneDoubleFactorisation> out;
  if (genus < 0) return out;
  const int n = target.degree();
  const int k = monotone_double_length(target, genus);
  const TotalOrder natural = TotalOrder::natural(n);
  for (const auto& sigma : full_cycles(n)) {
    const Permutation beta = sigma.inverse() * target;
    for (auto& seq : list_monotone_sequences(beta, k, natural))
      out.push_back({sigma, std::move(seq), target, genus});
  }
  return out;
}

std::vector<Transposition> strictly_monotone_factorisation(const Permutation& target) {
  // The last factor (j_k i_k) has i_k the largest moved symbol and j_k its
  // image; peel factors off the right end.
  const int n = target.degree();
  std::vector<Transposition> rev;
  Permutation cur = target;
  for (int i = n; i >= 2; --i) {
    const int j = cur(i);
    if (j == i) continue;
    if (j > i) throw std::logic_error("strictly monotone peeling found a symbol above the current maximum");
    rev.emplace_back(j, i);
    cur = swap_values(cur, j, i);
  }
  if (!cur.is_identity()) throw std::logic_error("strictly monotone peeling did not terminate at the identity");
  std::vector<Transposition> out(rev.rbegin(), rev.rend());
  if (static_cast<int>(out.size()) != n - target.cycle_count())
    throw std::logic_error("strictly monotone factorisation has the wrong length");
  if (product(n, out) != target) throw std::logic_error("strictly monotone factorisation has the wrong product");
  std::vector<Permutation> single{target};
  if (orbits(n, out) != orbits(n, single))
    throw std::logic_error("strictly monotone factors and target have different orbits");
  return out;
}

// ---------------------------------------------------------------------------
// Counting

std::vector<std::vector<Integer>> star_count_layers(int n, int root, int max_length, bool transitive) {
  const PermTable& table = PermTable::get(n);
  const std::size_t perms = table.size();
  if (root < 1 || root > n) throw std::invalid_argument("root outside [n]");

  // Legs are renumbered 0..n-2 for the coverage mask.
  std::vector<int> legs;
  for (int s = 1; s <= n; ++s)
    if (s != root) legs.push_back(s);
  const std::size_t masks = transitive ? (std::size_t{1} << legs.size()) : 1;
  const std::size_t full = masks - 1;

  std::vector<const std::vector<PermTable::Index>*> maps;
  for (int a : legs) maps.push_back(&table.right_transposition_map(std::min(a, root), std::max(a, root)));

  std::vector<Integer> cur(perms * masks);
  cur[table.identity_index() * masks + 0] = 1;
  std::vector<std::vector<Integer>> layers;
  auto harvest = [&](const std::vector<Integer>& state) {
    std::vector<Integer> out(perms);
    for (std::size_t i = 0; i < perms; ++i) out[i] = state[i * masks + full];
    return out;
  };
  layers.push_back(harvest(cur));
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Integer> next(perms * masks);
    for (std::size_t i = 0; i < perms; ++i) {
      for (std::size_t mask = 0; mask < masks; ++mask) {
        const Integer& v = cur[i * masks + mask];
        if (v == 0) continue;
        for (std::size_t l = 0; l < legs.size(); ++l) {
          const std::size_t j = (*maps[l])[i];
          const std::size_t nm = transitive ? (mask | (std::size_t{1} << l)) : 0;
          next[j * masks + nm] += v;
        }
      }
    }
    cur = std::move(next);
    layers.push_back(harvest(cur));
  }
  return layers;
}

Integer count_star(const Permutation& target, int genus, int root) {
  const int n = target.degree();
  if (root < 1 || root > n) throw std::invalid_argument("root " + std::to_string(root) + " outside [1, " + std::to_string(n) + "]");
  if (genus < 0) return 0;
  const int m = star_length(n, target, genus);
  const auto layers = star_count_layers(n, root, m, true);
  return layers[m][PermTable::get(n).index_of(target)];
}

Integer count_star_unconstrained(const Permutation& target, int length, int root) {
  if (length < 0) return 0;
  const int n = target.degree();
  const auto layers = star_count_layers(n, root, length, false);
  return layers[length][PermTable::get(n).index_of(target)];
}

std::vector<std::vector<Integer>> monotone_count_layers(const std::vector<Integer>& seeds,
                                                        const TotalOrder& order, int max_length) {
  const int n = order.size();
  const PermTable& table = PermTable::get(n);
  const std::size_t perms = table.size();
  if (seeds.size() != perms) throw std::invalid_argument("seed vector must cover S_n");

  // State (perm, r): r is the rank of the largest symbol used so far (0 when
  // nothing has been used; rank 0 can never be a larger symbol).
  const std::size_t ranks = static_cast<std::size_t>(n);
  std::vector<Integer> cur(perms * ranks);
  for (std::size_t i = 0; i < perms; ++i) cur[i * ranks] = seeds[i];

  std::vector<std::vector<std::pair<int, const std::vector<PermTable::Index>*>>> by_rank(n);
  for (int r = 1; r < n; ++r)
    for (int q = 0; q < r; ++q) {
      const int a = order.at(q);
      const int b = order.at(r);
      by_rank[r].push_back({r, &table.right_transposition_map(std::min(a, b), std::max(a, b))});
    }

  auto harvest = [&](const std::vector<Integer>& state) {
    std::vector<Integer> out(perms);
    for (std::size_t i = 0; i < perms; ++i)
      for (std::size_t r = 0; r < ranks; ++r) out[i] += state[i * ranks + r];
    return out;
  };
  std::vector<std::vector<Integer>> layers;
  layers.push_back(harvest(cur));
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Integer> next(perms * ranks);
    for (std::size_t i = 0; i < perms; ++i) {
      for (std::size_t r = 0; r < ranks; ++r) {
        const Integer& v = cur[i * ranks + r];
        if (v == 0) continue;
        for (int nr = std::max<int>(static_cast<int>(r), 1); nr < n; ++nr)
          for (const auto& [rank, map] : by_rank[nr]) next[(*map)[i] * ranks + rank] += v;
      }
    }
    cur = std::move(next);
    layers.push_back(harvest(cur));
  }
  return layers;
}

Integer count_monotone(const Permutation& target, int genus, const TotalOrder& order) {
  if (genus < 0) return 0;
  const int n = target.degree();
  const PermTable& table = PermTable::get(n);
  const int m = monotone_length(n, target, genus);
  std::vector<Integer> seeds(table.size());
  seeds[table.identity_index()] = 1;
  return monotone_count_layers(seeds, order, m)[m][table.index_of(target)];
}

Integer count_monotone_double(const Permutation& target, int genus) {
  if (genus < 0) return 0;
  const int n = target.degree();
  const PermTable& table = PermTable::get(n);
  std::vector<Integer> seeds(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.at(static_cast<PermTable::Index>(i)).cycle_count() == 1) seeds[i] = 1;
  const int k = monotone_double_length(target, genus);
  return monotone_count_layers(seeds, TotalOrder::natural(n), k)[k][table.index_of(target)];
}

Integer count_double_hurwitz(const Partition& alpha, const Partition& beta, int genus) {
  const int n = alpha.size();
  if (beta.size() != n) throw std::invalid_argument("alpha and beta must partition the same n");
  if (genus < 0) return 0;
  const int m = alpha.length() + beta.length() - 2 + 2 * genus;
  const PermTable& table = PermTable::get(n);

  using detail::PackedPartition;
  struct Key {
    PermTable::Index perm;
    PackedPartition orbits;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.orbits * 0x9E3779B97F4A7C15ull ^ k.perm);
    }
  };
  std::unordered_map<Key, Integer, KeyHash> cur;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Permutation& s = table.at(static_cast<PermTable::Index>(i));
    if (s.cycle_type() != alpha) continue;
    int labels[16];
    for (int x = 1; x <= n; ++x) labels[x - 1] = 0;
    int b = 0;
    for (const auto& c : s.cycles()) {
      for (int x : c) labels[x - 1] = b;
      ++b;
    }
    cur[{static_cast<PermTable::Index>(i), detail::packed_canonical(labels, n)}] += 1;
  }
  for (int step = 0; step < m; ++step) {
    std::unordered_map<Key, Integer, KeyHash> next;
    next.reserve(cur.size() * 2);
    for (const auto& [key, v] : cur) {
      for (int hi = 2; hi <= n; ++hi)
        for (int lo = 1; lo < hi; ++lo)
          next[{table.times_transposition(key.perm, lo, hi), detail::packed_join(key.orbits, n, lo - 1, hi - 1)}] += v;
    }
    cur = std::move(next);
  }
  Integer total = 0;
  for (const auto& [key, v] : cur)
    if (detail::packed_is_single_block(key.orbits) && table.at(key.perm).cycle_type() == beta) total += v;
  return total;
}

Integer double_hurwitz_b(const Partition& beta, int genus) {
  const int n = beta.size();
  const Integer h = count_double_hurwitz(Partition(std::vector<int>{n}), beta, genus);
  return exact_div(h, beta.class_size(), "b_g(" + beta.to_string() + ")");
}

} // namespace starfact
