#include "starfact/bijections.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace starfact {

TranspositionPair rhm(const TranspositionPair& pair) {
  const auto& [tau, sigma] = pair;
  return {sigma.relabel(tau.as_permutation(std::max(tau.high(), sigma.high()))), tau};
}

TranspositionPair lhm(const TranspositionPair& pair) {
  const auto& [tau, sigma] = pair;
  return {sigma, tau.relabel(sigma.as_permutation(std::max(tau.high(), sigma.high())))};
}

std::string move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::rhm: return "RHM";
    case MoveKind::lhm: return "LHM";
    case MoveKind::stage2: return "S2";
  }
  return "?";
}

namespace {

std::string pair_string(const TranspositionPair& p) { return p.first.to_string() + p.second.to_string(); }

Permutation pair_product(const TranspositionPair& p) {
  return p.first.as_permutation(kMaxDegree) * p.second.as_permutation(kMaxDegree);
}

// Applies one move to v[k], v[k+1] and records it.
void move_at(std::vector<Transposition>& v, std::size_t k, MoveKind kind, bool rightward,
             HurwitzMoveTrace* trace) {
  const TranspositionPair before{v[k], v[k + 1]};
  const TranspositionPair after = rightward ? rhm(before) : lhm(before);
  v[k] = after.first;
  v[k + 1] = after.second;
  if (trace) trace->record(static_cast<int>(k) + 1, kind, before, after);
}

void require_monotone(const std::vector<Transposition>& factors, const TotalOrder& order, const char* who) {
  for (const auto& t : factors)
    if (t.high() > order.size())
      throw std::invalid_argument(std::string(who) + ": factor " + t.to_string() + " outside the order");
  if (!is_monotone(factors, order))
    throw std::invalid_argument(std::string(who) + ": input is not monotone under " + order.to_string());
}

struct Region {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Positions whose order-larger symbol is x or y; contiguous for monotone input.
Region region_of(const std::vector<Transposition>& v, const TotalOrder& order, int x, int y) {
  Region r{v.size(), v.size()};
  for (std::size_t k = 0; k < v.size(); ++k) {
    const int b = v[k].larger(order);
    if (b == x || b == y) {
      if (r.begin == v.size()) r.begin = k;
      r.end = k + 1;
    }
  }
  if (r.begin == v.size()) r.end = r.begin;
  return r;
}

void check_same_product(const std::vector<Transposition>& a, const std::vector<Transposition>& b, int n,
                        const char* who) {
  if (product(n, a) != product(n, b)) throw std::logic_error(std::string(who) + " changed the product");
}

} // namespace

bool HurwitzMoveTrace::replay(std::vector<Transposition>& factors) const {
  for (const auto& s : steps_) {
    const std::size_t k = static_cast<std::size_t>(s.position - 1);
    if (s.position < 1 || k + 1 >= factors.size()) return false;
    if (factors[k] != s.before.first || factors[k + 1] != s.before.second) return false;
    if (pair_product(s.before) != pair_product(s.after)) return false;
    factors[k] = s.after.first;
    factors[k + 1] = s.after.second;
  }
  return true;
}

std::string HurwitzMoveTrace::render() const {
  std::ostringstream out;
  for (const auto& s : steps_)
    out << "pos=" << s.position << " move=" << move_kind_name(s.kind) << " before=" << pair_string(s.before)
        << " after=" << pair_string(s.after) << '\n';
  return out.str();
}

void HurwitzMoveTrace::append(const HurwitzMoveTrace& other, int offset) {
  for (auto s : other.steps_) {
    s.position += offset;
    steps_.push_back(s);
  }
}

// ---------------------------------------------------------------------------
// lambda_j

std::vector<Transposition> lambda_j(const std::vector<Transposition>& factors, const TotalOrder& order, int j,
                                    HurwitzMoveTrace* trace) {
  const int n = order.size();
  if (j < 1 || j >= n) throw std::invalid_argument("lambda_j: j must lie in [1, n-1]");
  require_monotone(factors, order, "lambda_j");
  const int x = order.at(j - 1);
  const int y = order.at(j);
  std::vector<Transposition> v = factors;
  const Region reg = region_of(v, order, x, y);

  // Stage 1: string 1 holds the factors with larger symbol x, string 2 those
  // with larger symbol y. Push each string-1 factor, rightmost first, to the
  // right end of the region.
  std::size_t len1 = 0;
  while (reg.begin + len1 < reg.end && v[reg.begin + len1].larger(order) == x) ++len1;
  const std::size_t len2 = reg.end - reg.begin - len1;
  if (len2 > 0) {
    for (std::size_t done = 0; done < len1; ++done) {
      std::size_t cur = reg.begin + len1 - 1 - done;
      const std::size_t stop = reg.end - 1 - done;
      while (cur < stop) {
        if (!v[cur + 1].contains(y)) throw std::logic_error("lambda_j: stage 1 met a factor without i_{j+1}");
        move_at(v, cur, MoveKind::rhm, true, trace);
        ++cur;
      }
    }
  }

  // Stage 2: string 1' is the first len2 positions of the region. Each (x y),
  // rightmost first, passes the (a y) factors to its right, turning them into
  // (a x).
  const std::size_t end1 = reg.begin + len2;
  for (std::size_t idx = end1; idx-- > reg.begin;) {
    if (!(v[idx].contains(x) && v[idx].contains(y))) continue;
    std::size_t cur = idx;
    while (cur + 1 < end1 && v[cur + 1].contains(y) && !v[cur + 1].contains(x)) {
      move_at(v, cur, MoveKind::stage2, true, trace);
      ++cur;
    }
  }

  check_same_product(factors, v, n, "lambda_j");
  if (!is_monotone(v, order.swapped(j))) throw std::logic_error("lambda_j produced a non-monotone sequence");
  return v;
}

std::vector<Transposition> lambda_j_inverse(const std::vector<Transposition>& factors, const TotalOrder& order,
                                            int j, HurwitzMoveTrace* trace) {
  const int n = order.size();
  if (j < 1 || j >= n) throw std::invalid_argument("lambda_j_inverse: j must lie in [1, n-1]");
  const TotalOrder swapped = order.swapped(j);
  require_monotone(factors, swapped, "lambda_j_inverse");
  const int x = order.at(j - 1);
  const int y = order.at(j);
  std::vector<Transposition> v = factors;
  const Region reg = region_of(v, swapped, x, y);

  // Undo stage 2: each (x y), leftmost first, returns left across the (a x)
  // factors in front of it, turning them back into (a y).
  for (std::size_t idx = reg.begin; idx < reg.end; ++idx) {
    if (!(v[idx].contains(x) && v[idx].contains(y))) continue;
    std::size_t cur = idx;
    while (cur > reg.begin && v[cur - 1].contains(x) && !v[cur - 1].contains(y)) {
      move_at(v, cur - 1, MoveKind::stage2, false, trace);
      --cur;
    }
  }

  // Undo stage 1: the trailing factors without y are the original string 1;
  // return them, leftmost first, to the front of the region.
  std::size_t len1 = 0;
  while (len1 < reg.end - reg.begin && !v[reg.end - 1 - len1].contains(y)) ++len1;
  const std::size_t start = reg.end - len1;
  for (std::size_t k = 0; k < len1; ++k) {
    std::size_t cur = start + k;
    const std::size_t stop = reg.begin + k;
    while (cur > stop) {
      if (!v[cur - 1].contains(y)) throw std::logic_error("lambda_j_inverse: stage 1 met a factor without i_{j+1}");
      move_at(v, cur - 1, MoveKind::lhm, false, trace);
      --cur;
    }
  }

  check_same_product(factors, v, n, "lambda_j_inverse");
  if (!is_monotone(v, order)) throw std::logic_error("lambda_j_inverse produced a non-monotone sequence");
  return v;
}

MonotoneFactorisation lambda_j(const MonotoneFactorisation& f, int j, HurwitzMoveTrace* trace) {
  return {f.order.swapped(j), lambda_j(f.factors, f.order, j, trace), f.target, f.genus};
}

MonotoneFactorisation lambda_j_inverse(const MonotoneFactorisation& f, int j, HurwitzMoveTrace* trace) {
  const TotalOrder original = f.order.swapped(j);
  return {original, lambda_j_inverse(f.factors, original, j, trace), f.target, f.genus};
}

// ---------------------------------------------------------------------------
// lambda_order

std::vector<int> sorting_sequence(const TotalOrder& order) {
  auto seq = simple_reflection_decomposition(order);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

std::vector<Transposition> lambda_order(const std::vector<Transposition>& factors, const TotalOrder& order,
                                        HurwitzMoveTrace* trace) {
  std::vector<Transposition> v = factors;
  TotalOrder cur = order;
  for (int j : sorting_sequence(order)) {
    v = lambda_j(v, cur, j, trace);
    cur = cur.swapped(j);
  }
  if (!cur.is_natural()) throw std::logic_error("sorting sequence did not reach the natural order");
  return v;
}

std::vector<Transposition> lambda_order_inverse(const std::vector<Transposition>& factors, const TotalOrder& order,
                                                HurwitzMoveTrace* trace) {
  const auto seq = sorting_sequence(order);
  std::vector<TotalOrder> orders{order};
  for (int j : seq) orders.push_back(orders.back().swapped(j));
  std::vector<Transposition> v = factors;
  for (std::size_t k = seq.size(); k-- > 0;) v = lambda_j_inverse(v, orders[k], seq[k], trace);
  return v;
}

MonotoneFactorisation lambda_order(const MonotoneFactorisation& f, HurwitzMoveTrace* trace) {
  return {TotalOrder::natural(f.degree()), lambda_order(f.factors, f.order, trace), f.target, f.genus};
}

// ---------------------------------------------------------------------------
// delta, theta

namespace {

std::vector<Transposition> conjugate_all(const std::vector<Transposition>& v, const Permutation& by) {
  std::vector<Transposition> out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back(conjugate(t, by));
  return out;
}

void require_natural_monotone(const MonotoneFactorisation& f, const char* who) {
  if (!f.order.is_natural()) throw std::invalid_argument(std::string(who) + ": input order must be natural");
  if (auto why = monotone_violation(f)) throw std::invalid_argument(std::string(who) + ": " + *why);
}

} // namespace

MonotoneFactorisation delta(const MonotoneFactorisation& f, const Permutation& by, HurwitzMoveTrace* trace) {
  require_natural_monotone(f, "delta");
  const TotalOrder order = order_from_conjugator(by);
  return {TotalOrder::natural(f.degree()), lambda_order(conjugate_all(f.factors, by), order, trace),
          conjugate(f.target, by), f.genus};
}

MonotoneFactorisation delta_inverse(const MonotoneFactorisation& f, const Permutation& by,
                                    HurwitzMoveTrace* trace) {
  require_natural_monotone(f, "delta_inverse");
  const Permutation back = by.inverse();
  const auto relabelled = lambda_order_inverse(f.factors, order_from_conjugator(by), trace);
  return {TotalOrder::natural(f.degree()), conjugate_all(relabelled, back), conjugate(f.target, back), f.genus};
}

MonotoneDoubleFactorisation theta(const MonotoneDoubleFactorisation& f, const Permutation& by,
                                  HurwitzMoveTrace* trace) {
  if (auto why = monotone_double_violation(f)) throw std::invalid_argument("theta: " + *why);
  const Permutation sigma = conjugate(f.sigma, by);
  const Permutation target = conjugate(f.target, by);
  // The tail is a monotone factorisation of beta under the relabelled order;
  // its own genus follows from c(beta), and the exchange keeps it.
  const Permutation beta = sigma.inverse() * target;
  const auto tail = conjugate_all(f.factors, by);
  if (!monotone_genus_of(f.degree(), beta, static_cast<int>(tail.size())))
    throw std::logic_error("theta: tail length incompatible with beta");
  HurwitzMoveTrace local;
  auto out = lambda_order(tail, order_from_conjugator(by), trace ? &local : nullptr);
  if (trace) trace->append(local, 0);
  return {sigma, std::move(out), target, f.genus};
}

MonotoneDoubleFactorisation theta_inverse(const MonotoneDoubleFactorisation& f, const Permutation& by,
                                          HurwitzMoveTrace* trace) {
  if (auto why = monotone_double_violation(f)) throw std::invalid_argument("theta_inverse: " + *why);
  const Permutation back = by.inverse();
  const auto tail = lambda_order_inverse(f.factors, order_from_conjugator(by), trace);
  return {conjugate(f.sigma, back), conjugate_all(tail, back), conjugate(f.target, back), f.genus};
}

// ---------------------------------------------------------------------------
// gamma

MonotoneDoubleFactorisation gamma_rooted(const StarFactorisation& f, HurwitzMoveTrace* trace) {
  if (auto why = star_violation(f)) throw std::invalid_argument(*why);
  const int n = f.n;
  const int r = f.root;
  std::vector<Transposition> v = f.factors();

  // Mark the first appearance of every leg; the legs in that order, then the
  // root, define the order the tail will be monotone under.
  std::vector<int> first_legs;
  std::vector<std::size_t> marked;
  std::vector<bool> seen(n + 1, false);
  for (std::size_t k = 0; k < f.legs.size(); ++k) {
    if (!seen[f.legs[k]]) {
      seen[f.legs[k]] = true;
      first_legs.push_back(f.legs[k]);
      marked.push_back(k);
    }
  }

  // Slide each marked factor left until it meets the previous marked one.
  for (std::size_t p = 1; p < marked.size(); ++p) {
    std::size_t cur = marked[p];
    while (cur > marked[p - 1] + 1) {
      move_at(v, cur - 1, MoveKind::lhm, false, trace);
      --cur;
    }
    marked[p] = cur;
  }

  const std::size_t prefix = first_legs.size();  // n - 1
  const Permutation sigma = product(n, std::span<const Transposition>(v.data(), prefix));
  std::vector<int> seq = first_legs;
  seq.push_back(r);
  const TotalOrder order(seq);
  std::vector<Transposition> tail(v.begin() + static_cast<std::ptrdiff_t>(prefix), v.end());
  if (!is_monotone(tail, order)) throw std::logic_error("gamma: collected tail is not monotone");

  HurwitzMoveTrace local;
  auto out = lambda_order(tail, order, trace ? &local : nullptr);
  if (trace) trace->append(local, static_cast<int>(prefix));
  MonotoneDoubleFactorisation md{sigma, std::move(out), f.target, f.genus};
  if (auto why = monotone_double_violation(md)) throw std::logic_error("gamma produced an invalid result: " + *why);
  return md;
}

StarFactorisation gamma_inverse_rooted(const MonotoneDoubleFactorisation& f, int root, HurwitzMoveTrace* trace) {
  if (auto why = monotone_double_violation(f)) throw std::invalid_argument(*why);
  const int n = f.degree();
  if (root < 1 || root > n) throw std::invalid_argument("root outside [n]");

  // sigma = (i_1 ... i_{n-1} root)
  std::vector<int> seq;
  for (int s = f.sigma(root); s != root; s = f.sigma(s)) seq.push_back(s);
  std::vector<Transposition> v;
  for (int s : seq) v.emplace_back(s, root);
  if (product(n, v) != f.sigma) throw std::logic_error("gamma_inverse: cycle expansion mismatch");
  const std::size_t prefix = v.size();
  seq.push_back(root);
  const TotalOrder order(seq);

  HurwitzMoveTrace local;
  const auto tail = lambda_order_inverse(f.factors, order, trace ? &local : nullptr);
  if (trace) trace->append(local, static_cast<int>(prefix));
  v.insert(v.end(), tail.begin(), tail.end());

  // Push each expanded factor, last first, right until it sits before a
  // factor containing the root.
  for (std::size_t p = prefix; p-- > 0;) {
    std::size_t cur = p;
    while (cur + 1 < v.size() && !v[cur + 1].contains(root)) {
      move_at(v, cur, MoveKind::rhm, true, trace);
      ++cur;
    }
  }

  StarFactorisation out{n, root, {}, f.target, f.genus};
  for (const auto& t : v) {
    if (!t.contains(root)) throw std::logic_error("gamma_inverse left a factor without the root");
    out.legs.push_back(t.other(root));
  }
  if (auto why = star_violation(out)) throw std::logic_error("gamma_inverse produced an invalid result: " + *why);
  return out;
}

MonotoneDoubleFactorisation gamma(const StarFactorisation& f, HurwitzMoveTrace* trace) {
  if (f.root != f.n) throw std::invalid_argument("gamma expects root n = " + std::to_string(f.n));
  return gamma_rooted(f, trace);
}

StarFactorisation gamma_inverse(const MonotoneDoubleFactorisation& f, HurwitzMoveTrace* trace) {
  return gamma_inverse_rooted(f, f.degree(), trace);
}

StarFactorisation reroot(const StarFactorisation& f, int root, HurwitzMoveTrace* trace) {
  return gamma_inverse_rooted(gamma_rooted(f, trace), root, trace);
}

Permutation conjugator(const Permutation& from, const Permutation& to) {
  if (from.degree() != to.degree()) throw std::invalid_argument("conjugator: degree mismatch");
  if (from.cycle_type() != to.cycle_type())
    throw std::invalid_argument(from.to_string() + " and " + to.to_string() + " are not conjugate");
  auto by_length = [](const std::vector<int>& a, const std::vector<int>& b) { return a.size() > b.size(); };
  auto cf = from.cycles();
  auto ct = to.cycles();
  std::stable_sort(cf.begin(), cf.end(), by_length);
  std::stable_sort(ct.begin(), ct.end(), by_length);
  std::vector<int> rho(from.degree());
  for (std::size_t c = 0; c < cf.size(); ++c)
    for (std::size_t k = 0; k < cf[c].size(); ++k) rho[cf[c][k] - 1] = ct[c][k];
  // conjugate(p, d) renames s to d^-1(s), so d^-1 = rho.
  const Permutation d = Permutation::from_images(rho).inverse();
  if (conjugate(from, d) != to) throw std::logic_error("conjugator: relabelling failed");
  return d;
}

StarFactorisation centrality_witness(const StarFactorisation& f, const Permutation& to, HurwitzMoveTrace* trace) {
  const Permutation d = conjugator(f.target, to);
  return gamma_inverse(theta(gamma(f, trace), d, trace), trace);
}

} // namespace starfact
