#include "starfact/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <sstream>

namespace starfact {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("degree must lie in [1, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(n));
}

// Reads the symbol lists between parentheses: "(1 2)(3 4 5)" -> {{1,2},{3,4,5}}.
std::vector<std::vector<int>> parse_cycle_lists(std::string_view text) {
  std::vector<std::vector<int>> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' at position " + std::to_string(i) + " in \"" +
                                  std::string(text) + "\"");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size())
        throw std::invalid_argument("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("unexpected '" + std::string(1, text[i]) + "' at position " +
                                    std::to_string(i) + " in \"" + std::string(text) + "\"");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
    }
    out.push_back(std::move(cyc));
    skip_ws();
  }
  return out;
}

} // namespace

Permutation::Permutation(int n) : word_(kernels::identity_word()), n_(static_cast<std::uint8_t>(n)) {
  check_degree(n);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  kernels::PermWord w = kernels::identity_word();
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("images do not form a bijection of [" + std::to_string(n) + "]");
    seen[v - 1] = true;
    w.img[i] = static_cast<std::uint8_t>(v - 1);
  }
  return Permutation(n, w);
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  check_degree(n);
  kernels::PermWord w = kernels::identity_word();
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (int s : c) {
      if (s < 1 || s > n)
        throw std::invalid_argument("symbol " + std::to_string(s) + " outside [1, " +
                                    std::to_string(n) + "]");
      if (used[s - 1]) throw std::invalid_argument("symbol " + std::to_string(s) + " repeated");
      used[s - 1] = true;
    }
    for (std::size_t k = 0; k < c.size(); ++k)
      w.img[c[k] - 1] = static_cast<std::uint8_t>(c[(k + 1) % c.size()] - 1);
  }
  return Permutation(n, w);
}

Permutation Permutation::transposition(int n, int a, int b) {
  return from_cycles(n, {{a, b}});
}

Permutation Permutation::cycle(int n, std::span<const int> entries) {
  return from_cycles(n, {std::vector<int>(entries.begin(), entries.end())});
}

Permutation Permutation::parse(std::string_view text, int n) {
  const auto lists = parse_cycle_lists(text);
  int maxsym = 0;
  for (const auto& c : lists)
    for (int s : c) maxsym = std::max(maxsym, s);
  if (n == 0) n = std::max(maxsym, 1);
  return from_cycles(n, lists);
}

Permutation Permutation::inverse() const {
  kernels::PermWord w = kernels::identity_word();
  for (int i = 0; i < n_; ++i) w.img[word_.img[i]] = static_cast<std::uint8_t>(i);
  return Permutation(n_, w);
}

bool Permutation::is_identity() const { return word_ == kernels::identity_word(); }

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n_, false);
  for (int s = 1; s <= n_; ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> c;
    for (int x = s; !seen[x - 1]; x = (*this)(x)) {
      seen[x - 1] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::cycle_count() const {
  int c = 0;
  std::uint32_t seen = 0;
  for (int s = 0; s < n_; ++s) {
    if (seen & (1u << s)) continue;
    ++c;
    for (int x = s; !(seen & (1u << x)); x = word_.img[x]) seen |= 1u << x;
  }
  return c;
}

Partition Permutation::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
  return Partition(std::move(parts));
}

std::string Permutation::to_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

std::vector<int> Permutation::images() const {
  std::vector<int> v(n_);
  for (int i = 0; i < n_; ++i) v[i] = word_.img[i] + 1;
  return v;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n_ != q.n_)
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.n_) + " vs " +
                                std::to_string(q.n_));
  kernels::PermWord w;
  for (int i = 0; i < kernels::kWordSize; ++i) w.img[i] = q.word_.img[p.word_.img[i]];
  return Permutation(p.n_, w);
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
  return by * p * by.inverse();
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n);
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------

Transposition::Transposition(int a, int b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("transposition needs two distinct symbols");
  if (lo_ < 1) throw std::invalid_argument("transposition symbols are 1-based");
}

int Transposition::smaller(const TotalOrder& order) const {
  return order.less(lo_, hi_) ? lo_ : hi_;
}

int Transposition::larger(const TotalOrder& order) const {
  return order.less(lo_, hi_) ? hi_ : lo_;
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(lo_) + " " + std::to_string(hi_) + ")";
}

std::string Transposition::to_string(const TotalOrder& order) const {
  return "(" + std::to_string(smaller(order)) + " " + std::to_string(larger(order)) + ")";
}

Transposition conjugate(const Transposition& t, const Permutation& by) {
  return t.relabel(by.inverse());
}

Permutation product(int n, std::span<const Transposition> factors) {
  Permutation p(n);
  kernels::PermWord w = p.word();
  for (const auto& t : factors) {
    if (t.high() > n) throw std::invalid_argument("transposition " + t.to_string() + " outside S_" + std::to_string(n));
    // right-multiplying by (a b) swaps the values a and b in the image table
    for (int i = 0; i < n; ++i) {
      if (w.img[i] == t.low() - 1)
        w.img[i] = static_cast<std::uint8_t>(t.high() - 1);
      else if (w.img[i] == t.high() - 1)
        w.img[i] = static_cast<std::uint8_t>(t.low() - 1);
    }
  }
  return Permutation::from_word(n, w);
}

std::vector<Transposition> parse_transpositions(std::string_view text) {
  std::vector<Transposition> out;
  for (const auto& c : parse_cycle_lists(text)) {
    if (c.empty()) continue;  // "()" is the empty sequence
    if (c.size() != 2)
      throw std::invalid_argument("expected a transposition, got a cycle of length " +
                                  std::to_string(c.size()));
    out.emplace_back(c[0], c[1]);
  }
  return out;
}

std::string to_string(std::span<const Transposition> factors) {
  std::string s;
  for (const auto& t : factors) s += t.to_string();
  return s.empty() ? "()" : s;
}

std::string to_string(std::span<const Transposition> factors, const TotalOrder& order) {
  std::string s;
  for (const auto& t : factors) s += t.to_string(order);
  return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("partition must look like [3,1,1], got \"" + std::string(text) + "\"");
  std::vector<int> parts;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("bad partition part \"" + item + "\"");
    parts.push_back(std::stoi(item));
  }
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(n, 1)); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::with_part(int i) const {
  auto p = parts_;
  p.push_back(i);
  return Partition(std::move(p));
}

Partition Partition::without_index(std::size_t t) const {
  auto p = parts_;
  p.erase(p.begin() + static_cast<std::ptrdiff_t>(t));
  return Partition(std::move(p));
}

Partition Partition::merged(const Partition& other) const {
  auto p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(p));
}

Integer Partition::class_size() const {
  // n! / prod_i (i^{m_i} m_i!)
  Integer z = 1;
  for (std::size_t k = 0; k < parts_.size();) {
    std::size_t run = k;
    while (run < parts_.size() && parts_[run] == parts_[k]) ++run;
    const int mult = static_cast<int>(run - k);
    z *= factorial(mult);
    for (int m = 0; m < mult; ++m) z *= parts_[k];
    k = run;
  }
  return factorial(size()) / z;
}

Permutation Partition::representative() const {
  const int n = size();
  std::vector<std::vector<int>> cyc;
  int next = 1;
  for (int part : parts_) {
    std::vector<int> c;
    for (int k = 0; k < part; ++k) c.push_back(next++);
    cyc.push_back(std::move(c));
  }
  return Permutation::from_cycles(n, cyc);
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------

TotalOrder::TotalOrder(std::vector<int> sequence) : seq_(std::move(sequence)), rank_(seq_.size(), -1) {
  const int n = static_cast<int>(seq_.size());
  for (int r = 0; r < n; ++r) {
    const int s = seq_[r];
    if (s < 1 || s > n || rank_[s - 1] != -1)
      throw std::invalid_argument("order must list each of 1.." + std::to_string(n) + " once");
    rank_[s - 1] = r;
  }
}

TotalOrder TotalOrder::natural(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return TotalOrder(std::move(v));
}

TotalOrder TotalOrder::parse(std::string_view text) {
  std::vector<int> seq;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '<')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("order must look like 3<2<1, got \"" + s + "\"");
    seq.push_back(std::stoi(item));
  }
  return TotalOrder(std::move(seq));
}

bool TotalOrder::is_natural() const {
  for (int r = 0; r < size(); ++r)
    if (seq_[r] != r + 1) return false;
  return true;
}

TotalOrder TotalOrder::swapped(int j) const {
  if (j < 1 || j >= size()) throw std::invalid_argument("swap index out of range");
  auto s = seq_;
  std::swap(s[j - 1], s[j]);
  return TotalOrder(std::move(s));
}

std::string TotalOrder::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < seq_.size(); ++k) {
    if (k) s += '<';
    s += std::to_string(seq_[k]);
  }
  return s;
}

TotalOrder order_from_conjugator(const Permutation& delta) {
  const Permutation inv = delta.inverse();
  std::vector<int> seq(delta.degree());
  for (int k = 1; k <= delta.degree(); ++k) seq[k - 1] = inv(k);
  return TotalOrder(std::move(seq));
}

std::vector<int> simple_reflection_decomposition(const TotalOrder& target) {
  // Bubble-sort the target back to the natural order, then replay in reverse.
  auto s = target.sequence();
  std::vector<int> sorting;
  const int n = static_cast<int>(s.size());
  for (int pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (int k = 0; k + 1 < n - pass; ++k) {
      if (s[k] > s[k + 1]) {
        std::swap(s[k], s[k + 1]);
        sorting.push_back(k + 1);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  std::reverse(sorting.begin(), sorting.end());
  return sorting;
}

// ---------------------------------------------------------------------------

OrbitPartition::OrbitPartition(std::span<const int> labels) : label_(labels.size()) {
  std::vector<int> rename;
  std::vector<int> from;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find(from.begin(), from.end(), labels[i]);
    if (it == from.end()) {
      from.push_back(labels[i]);
      label_[i] = static_cast<int>(from.size()) - 1;
    } else {
      label_[i] = static_cast<int>(it - from.begin());
    }
  }
  blocks_ = static_cast<int>(from.size());
}

OrbitPartition OrbitPartition::singletons(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  return OrbitPartition(l);
}

std::vector<std::vector<int>> OrbitPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int s = 1; s <= degree(); ++s) out[label_[s - 1]].push_back(s);
  return out;
}

OrbitPartition OrbitPartition::joined(int a, int b) const {
  const int la = label_[a - 1];
  const int lb = label_[b - 1];
  if (la == lb) return *this;
  auto l = label_;
  for (int& x : l)
    if (x == lb) x = la;
  return OrbitPartition(l);
}

std::uint64_t OrbitPartition::key() const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < label_.size(); ++i) k |= static_cast<std::uint64_t>(label_[i]) << (4 * i);
  return k;
}

std::string OrbitPartition::to_string() const {
  std::string s = "{";
  bool first_block = true;
  for (const auto& b : blocks()) {
    if (!first_block) s += ',';
    first_block = false;
    s += '{';
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(b[k]);
    }
    s += '}';
  }
  return s + "}";
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

OrbitPartition finish(UnionFind& uf, int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = uf.find(i);
  return OrbitPartition(labels);
}

} // namespace

OrbitPartition orbits(int n, std::span<const Permutation> generators) {
  UnionFind uf(n);
  for (const auto& g : generators) {
    if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");
    for (int s = 1; s <= n; ++s) uf.unite(s - 1, g(s) - 1);
  }
  return finish(uf, n);
}

OrbitPartition orbits(int n, std::span<const Transposition> generators) {
  UnionFind uf(n);
  for (const auto& t : generators) {
    if (t.high() > n) throw std::invalid_argument("transposition outside [n]");
    uf.unite(t.low() - 1, t.high() - 1);
  }
  return finish(uf, n);
}

JoinCut join_cut(const Permutation& nu, const Transposition& t) {
  if (t.high() > nu.degree()) throw std::invalid_argument("transposition outside [n]");
  for (int x = nu(t.low()); x != t.low(); x = nu(x))
    if (x == t.high()) return JoinCut::cut;
  return JoinCut::join;
}

// ---------------------------------------------------------------------------

Integer factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer exact_div(const Integer& num, const Integer& den, const std::string& what) {
  if (den == 0) throw std::logic_error(what + ": division by zero");
  if (num % den != 0)
    throw std::logic_error(what + ": " + num.str() + " is not divisible by " + den.str());
  return num / den;
}

} // namespace starfact

std::size_t std::hash<starfact::Permutation>::operator()(const starfact::Permutation& p) const noexcept {
  std::uint64_t a;
  std::uint64_t b;
  std::memcpy(&a, p.word().img.data(), 8);
  std::memcpy(&b, p.word().img.data() + 8, 8);
  std::uint64_t h = a * 0x9E3779B97F4A7C15ull ^ (b + 0x632BE59BD9B4E019ull + (a << 6) + (a >> 2));
  return static_cast<std::size_t>(h ^ (h >> 29) ^ static_cast<std::uint64_t>(p.degree()));
}
