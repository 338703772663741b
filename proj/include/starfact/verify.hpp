#pragma once

// Named verification suites shared by the command-line tool and the
// acceptance tests. Each suite runs a family of exact checks up to the
// configured bounds and reports every check individually.

#include "starfact/formulas.hpp"
#include "starfact/serialize.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace starfact {

/// Size limits applied before any work starts.
struct Bounds {
  static constexpr int listing_n = 5;
  static constexpr int listing_g = 2;
  static constexpr int counting_n = 6;
  static constexpr int relation_n = kDefaultRelationBound;
};

class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Throws BoundsError naming the bound unless `unsafe` is set.
void check_bound(const std::string& what, int value, int limit, bool unsafe);

struct SuiteConfig {
  int n_max = -1;  // -1 selects the suite's default
  int g_max = -1;
  int k_max = -1;
  /// Listing-based parts of a suite stop at these sizes.
  int list_n_max = 4;
  int list_g_max = 1;
  bool unsafe_bounds = false;
};

struct CheckResult {
  std::string name;
  std::string detail;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;  // with defaults resolved
  std::vector<CheckResult> checks;
  bool pass() const;
  Json to_json() const;
};

/// Suite names in a fixed order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument listing the suites for an unknown name and
/// BoundsError when the configuration exceeds a bound.
SuiteReport run_suite(const std::string& name, SuiteConfig config);

/// Rows for every lambda of size 1..n_max and genus 0..g_max.
std::vector<TableRow> build_table(int n_max, int g_max);

// Exploratory computations; their output is reported, not asserted.
struct ExpansionComparison {
  std::string function;    // p_lambda
  int n = 0;
  bool expressible = false;  // p_lambda(J) lies in the span of the e_mu(J) tried
  bool agree = false;
  std::string rewrite;     // sum of c_mu e_mu with the same value at the J's
  std::string direct;      // T_n applied to p_lambda
  std::string rewritten;   // sum of c_mu T_n(e_mu)
};
/// For 2 <= n <= n_max and 1 <= |lambda| <= max_size, rewrites p_lambda(J) as
/// a combination of e_mu(J) (parts < n, |mu| <= |lambda|, smallest |mu|
/// preferred) and compares the transitivity operator on both expressions.
std::vector<ExpansionComparison> compare_expansions(int n_max, int max_size);

struct SpanDimension {
  int n = 0;
  int max_size = 0;
  int span = 0;         // span of T_n(f_lambda), f in {e, h, p}
  int algebra = 0;      // subalgebra generated by those elements
  int centre = 0;       // number of partitions of n
};
std::vector<SpanDimension> span_dimensions(int n_max, int max_size);

} // namespace starfact
