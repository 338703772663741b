// starfact: counting, listing, bijection traces, group algebra expressions,
// verification suites and tables.
//
// Exit status: 0 success, 1 a verification failed, 2 usage or bounds error.

#include "starfact/bijections.hpp"
#include "starfact/expr.hpp"
#include "starfact/factorisations.hpp"
#include "starfact/formulas.hpp"
#include "starfact/group_algebra.hpp"
#include "starfact/perm_table.hpp"
#include "starfact/serialize.hpp"
#include "starfact/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace starfact;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool unsafe = false;
  int threads = 0;

  // count / enumerate / trace
  std::string family = "star";
  std::string target;
  std::string partition;
  int n = 0;
  int genus = 0;
  int root = 0;
  std::string order;
  std::string method = "auto";

  // trace
  std::string bijection;
  std::string legs;
  std::string factors;
  std::string sigma;
  std::string by;
  int j = 0;
  int to = 0;

  // algebra
  std::string expr;

  // verify / table / experiment
  std::string suite;
  int n_max = -1;
  int g_max = -1;
  int k_max = -1;
  int list_n = -1;
  int list_g = -1;
  std::string experiment;
  int max_size = 4;
};

bool json_output(const Options& o) { return o.format == "json"; }

void emit_json(const std::string& command, const Json& config, const Json& results, bool pass) {
  Json j;
  j["command"] = command;
  j["config"] = config;
  j["results"] = results;
  j["pass"] = pass;
  std::cout << j.dump(2) << '\n';
}

Permutation resolve_target(const Options& o) {
  if (!o.target.empty() && !o.partition.empty()) throw UsageError("give --target or --partition, not both");
  if (!o.partition.empty()) {
    const Partition p = Partition::parse(o.partition);
    if (p.empty()) throw UsageError("the empty partition has no permutation");
    if (o.n && o.n != p.size()) throw UsageError("--n does not match the size of --partition");
    return p.representative();
  }
  if (o.target.empty()) throw UsageError("--target or --partition is required");
  return Permutation::parse(o.target, o.n);
}

int resolve_root(const Options& o, int n) {
  const int r = o.root ? o.root : n;
  if (r < 1 || r > n) throw UsageError("--root must lie in 1.." + std::to_string(n));
  return r;
}

TotalOrder resolve_order(const Options& o, int n) {
  if (o.order.empty()) return TotalOrder::natural(n);
  TotalOrder t = TotalOrder::parse(o.order);
  if (t.size() != n) throw UsageError("--order must rank all of 1.." + std::to_string(n));
  return t;
}

std::vector<int> parse_legs(const std::string& text) {
  std::vector<int> legs;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      legs.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("legs must be a comma-separated list of symbols, got \"" + text + "\"");
    }
  }
  return legs;
}

Json base_config(const Options& o) {
  Json c;
  c["format"] = o.format;
  c["unsafe_bounds"] = o.unsafe;
  return c;
}

// ---------------------------------------------------------------------------

int cmd_count(const Options& o) {
  const Permutation w = resolve_target(o);
  const int n = w.degree();
  const int g = o.genus;
  if (g < 0) throw UsageError("--genus must be non-negative");
  const std::string& fam = o.family;
  if (fam != "star" && fam != "monotone" && fam != "md" && fam != "b")
    throw UsageError("unknown family '" + fam + "' (star, monotone, md, b)");
  if (o.method != "auto" && o.method != "dp" && o.method != "listing" && o.method != "formula" && o.method != "all")
    throw UsageError("unknown method '" + o.method + "' (auto, dp, listing, formula, all)");
  const bool all = o.method == "all";
  const bool want_dp = all || o.method == "auto" || o.method == "dp";
  const bool want_formula = all || o.method == "auto" || o.method == "formula";
  const bool want_listing = all || o.method == "listing";

  std::vector<std::pair<std::string, Integer>> results;
  if (want_dp) {
    check_bound("n", n, Bounds::counting_n, o.unsafe);
    if (fam == "star") results.emplace_back("dp", count_star(w, g, resolve_root(o, n)));
    else if (fam == "monotone") results.emplace_back("dp", count_monotone(w, g, resolve_order(o, n)));
    else if (fam == "md") results.emplace_back("dp", count_monotone_double(w, g));
    else results.emplace_back("dp", double_hurwitz_b(w.cycle_type(), g));
  }
  if (want_listing && fam != "b") {
    check_bound("n", n, Bounds::listing_n, o.unsafe);
    check_bound("g", g, Bounds::listing_g, o.unsafe);
    if (fam == "star") results.emplace_back("listing", Integer(enumerate_star(w, g, resolve_root(o, n)).size()));
    else if (fam == "monotone")
      results.emplace_back("listing", Integer(enumerate_monotone(w, g, resolve_order(o, n)).size()));
    else results.emplace_back("listing", Integer(enumerate_monotone_double(w, g).size()));
  }
  if (want_formula && (fam == "star" || fam == "md")) {
    const Partition type = w.cycle_type();
    results.emplace_back("formula", feray_count(type, g));
    if (fam == "star") {
      // The recurrence tracks the cycle through the root.
      int i = 0;
      std::vector<int> rest;
      const int r = resolve_root(o, n);
      for (const auto& cyc : w.cycles()) {
        if (std::find(cyc.begin(), cyc.end(), r) != cyc.end()) i = static_cast<int>(cyc.size());
        else rest.push_back(static_cast<int>(cyc.size()));
      }
      results.emplace_back("recurrence", recurrence_star(i, Partition(rest), g));
    } else if (type.length() == 1) {
      results.emplace_back("closed-form", md_full_cycle(n, g));
    } else if (type == Partition::ones(n)) {
      results.emplace_back("closed-form", md_identity(n, g));
    }
  }
  if (results.empty()) throw UsageError("method '" + o.method + "' is not available for family '" + fam + "'");

  bool agree = true;
  for (const auto& r : results) agree = agree && r.second == results.front().second;

  if (json_output(o)) {
    Json c = base_config(o);
    c["family"] = fam;
    c["n"] = n;
    c["target"] = w.to_string();
    c["genus"] = g;
    if (fam == "star") c["root"] = resolve_root(o, n);
    if (fam == "monotone") c["order"] = resolve_order(o, n).to_string();
    c["method"] = o.method;
    Json a = Json::array();
    for (const auto& [m, v] : results) a.push_back(Json{{"method", m}, {"count", to_json(v)}});
    emit_json("count", c, a, agree);
  } else {
    for (const auto& [m, v] : results) std::cout << v.str() << " method=" << m << '\n';
    if (results.size() > 1) std::cout << (agree ? "methods agree" : "METHODS DISAGREE") << '\n';
  }
  return agree ? kOk : kFailed;
}

int cmd_enumerate(const Options& o) {
  const Permutation w = resolve_target(o);
  const int n = w.degree();
  const int g = o.genus;
  check_bound("n", n, Bounds::listing_n, o.unsafe);
  check_bound("g", g, Bounds::listing_g, o.unsafe);
  std::vector<std::string> lines;
  Json a = Json::array();
  if (o.family == "star") {
    for (const auto& f : enumerate_star(w, g, resolve_root(o, n))) {
      lines.push_back(to_line(f));
      a.push_back(to_json(f));
    }
  } else if (o.family == "monotone") {
    for (const auto& f : enumerate_monotone(w, g, resolve_order(o, n))) {
      lines.push_back(to_line(f));
      a.push_back(to_json(f));
    }
  } else if (o.family == "md") {
    for (const auto& f : enumerate_monotone_double(w, g)) {
      lines.push_back(to_line(f));
      a.push_back(to_json(f));
    }
  } else {
    throw UsageError("unknown family '" + o.family + "' (star, monotone, md)");
  }
  if (json_output(o)) {
    Json c = base_config(o);
    c["family"] = o.family;
    c["n"] = n;
    c["target"] = w.to_string();
    c["genus"] = g;
    emit_json("enumerate", c, a, true);
  } else {
    for (const auto& l : lines) std::cout << l << '\n';
  }
  return kOk;
}

Json trace_json(const HurwitzMoveTrace& t) {
  Json a = Json::array();
  for (const auto& s : t.steps())
    a.push_back(Json{{"pos", s.position},
                     {"move", move_kind_name(s.kind)},
                     {"before", s.before.first.to_string() + s.before.second.to_string()},
                     {"after", s.after.first.to_string() + s.after.second.to_string()}});
  return a;
}

int cmd_trace(const Options& o) {
  HurwitzMoveTrace trace;
  std::string line;
  Json result;
  Json c = base_config(o);
  c["bijection"] = o.bijection;

  auto star_input = [&]() {
    const Permutation w = resolve_target(o);
    StarFactorisation f{w.degree(), resolve_root(o, w.degree()), parse_legs(o.legs), w, 0};
    const auto m = star_length(f.n, w, 0);
    // A length that fits no genus is reported by the membership check.
    const int extra = static_cast<int>(f.legs.size()) - m;
    f.genus = extra > 0 ? extra / 2 : 0;
    if (auto why = star_violation(f)) throw UsageError(*why);
    c["target"] = w.to_string();
    c["root"] = f.root;
    c["legs"] = f.legs;
    return f;
  };
  auto monotone_input = [&](const TotalOrder& order) {
    const auto fs = parse_transpositions(o.factors);
    const int n = order.size();
    const Permutation prod = product(n, fs);
    const auto genus = monotone_genus_of(n, prod, static_cast<int>(fs.size()));
    if (!genus) throw UsageError("condition H1 violated: length does not fit any genus");
    MonotoneFactorisation f{order, fs, prod, *genus};
    if (auto why = monotone_violation(f)) throw UsageError(*why);
    c["factors"] = o.factors;
    c["order"] = order.to_string();
    return f;
  };
  auto degree_from_factors = [&]() {
    int n = o.n;
    for (const auto& t : parse_transpositions(o.factors)) n = std::max(n, t.high());
    return std::max(n, 1);
  };

  if (o.bijection == "gamma") {
    const auto f = star_input();
    const auto m = gamma_rooted(f, &trace);
    line = to_line(m);
    result = to_json(m);
  } else if (o.bijection == "reroot") {
    const auto f = star_input();
    if (o.to < 1 || o.to > f.n) throw UsageError("--to must lie in 1.." + std::to_string(f.n));
    const auto r = reroot(f, o.to, &trace);
    c["to"] = o.to;
    line = to_line(r);
    result = to_json(r);
  } else if (o.bijection == "lambda_j" || o.bijection == "lambda") {
    const int n = o.order.empty() ? degree_from_factors() : TotalOrder::parse(o.order).size();
    const TotalOrder order = o.order.empty() ? TotalOrder::natural(n) : TotalOrder::parse(o.order);
    if (o.bijection == "lambda_j") {
      const auto f = monotone_input(order);
      if (o.j < 1 || o.j >= n) throw UsageError("--j must lie in 1.." + std::to_string(n - 1));
      c["j"] = o.j;
      const auto h = lambda_j(f, o.j, &trace);
      line = to_line(h);
      result = to_json(h);
    } else {
      // Input monotone under --order, carried to the natural order.
      const auto f = monotone_input(order);
      const auto h = lambda_order(f, &trace);
      line = to_line(h);
      result = to_json(h);
    }
  } else if (o.bijection == "delta") {
    const int n = std::max(degree_from_factors(), Permutation::parse(o.by).degree());
    const auto f = monotone_input(TotalOrder::natural(n));
    const Permutation d = Permutation::parse(o.by, n);
    c["by"] = d.to_string();
    const auto h = delta(f, d, &trace);
    line = to_line(h);
    result = to_json(h);
  } else if (o.bijection == "theta") {
    if (o.sigma.empty()) throw UsageError("theta needs --sigma");
    const int n = std::max({degree_from_factors(), Permutation::parse(o.sigma).degree(), Permutation::parse(o.by).degree()});
    const Permutation sigma = Permutation::parse(o.sigma, n);
    const auto tail = parse_transpositions(o.factors);
    const Permutation target = sigma * product(n, tail);
    const int extra = static_cast<int>(tail.size()) - monotone_double_length(target, 0);
    if (extra < 0 || extra % 2) throw UsageError("condition H1 violated: tail length does not fit any genus");
    const MonotoneDoubleFactorisation f{sigma, tail, target, extra / 2};
    if (auto why = monotone_double_violation(f)) throw UsageError(*why);
    const Permutation d = Permutation::parse(o.by, n);
    c["sigma"] = sigma.to_string();
    c["factors"] = o.factors;
    c["by"] = d.to_string();
    const auto h = theta(f, d, &trace);
    line = to_line(h);
    result = to_json(h);
  } else {
    throw UsageError("unknown bijection '" + o.bijection + "' (gamma, lambda_j, lambda, delta, theta, reroot)");
  }

  if (json_output(o)) {
    emit_json("trace", c, Json{{"steps", trace_json(trace)}, {"result", result}}, true);
  } else {
    std::cout << trace.render() << "result=" << line << '\n';
  }
  return kOk;
}

int cmd_algebra(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be positive");
  if (o.n > PermTable::kMaxTableDegree) throw UsageError("--n exceeds " + std::to_string(PermTable::kMaxTableDegree));
  check_bound("n", o.n, Bounds::counting_n, o.unsafe);
  const AlgebraElement x = to_element(parse_expression(o.expr, o.n));
  Json c = base_config(o);
  c["n"] = o.n;
  c["expr"] = o.expr;
  const auto failure = centrality_failure(x);
  if (json_output(o)) {
    Json r;
    r["central"] = !failure;
    if (failure) {
      r["witness"] = Json{{"first", failure->first.to_string()},
                          {"first_coefficient", to_json(failure->first_coefficient)},
                          {"second", failure->second.to_string()},
                          {"second_coefficient", to_json(failure->second_coefficient)}};
    } else {
      r["decomposition"] = to_json(decompose(x));
      r["rendered"] = render_decomposition(decompose(x));
    }
    emit_json("algebra", c, r, true);
  } else if (failure) {
    std::cout << "NotCentral: coefficient " << failure->first_coefficient.str() << " at " << failure->first.to_string()
              << " but " << failure->second_coefficient.str() << " at the conjugate " << failure->second.to_string()
              << '\n';
  } else {
    std::cout << render_decomposition(decompose(x)) << '\n';
  }
  return kOk;
}

SuiteConfig suite_config(const Options& o) {
  SuiteConfig s;
  s.n_max = o.n_max;
  s.g_max = o.g_max;
  s.k_max = o.k_max;
  if (o.list_n >= 0) s.list_n_max = o.list_n;
  if (o.list_g >= 0) s.list_g_max = o.list_g;
  s.unsafe_bounds = o.unsafe;
  return s;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else names.push_back(o.suite);
  std::vector<SuiteReport> reports;
  for (const auto& name : names) reports.push_back(run_suite(name, suite_config(o)));
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (json_output(o)) {
    Json c = base_config(o);
    c["suite"] = o.suite;
    Json a = Json::array();
    for (const auto& r : reports) a.push_back(r.to_json());
    emit_json("verify", c, a, pass);
  } else {
    for (const auto& r : reports) {
      std::cout << "suite " << r.suite << '\n';
      for (const auto& ch : r.checks)
        std::cout << (ch.pass ? "  PASS " : "  FAIL ") << ch.name << ": " << ch.detail << '\n';
    }
    std::cout << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kOk : kFailed;
}

int cmd_table(const Options& o) {
  const int n = o.n_max < 0 ? 5 : o.n_max;
  const int g = o.g_max < 0 ? 2 : o.g_max;
  check_bound("n", n, Bounds::counting_n, o.unsafe);
  const auto rows = build_table(n, g);
  bool pass = true;
  for (const auto& r : rows) pass = pass && r.all_agree;
  if (json_output(o)) {
    Json c = base_config(o);
    c["n"] = n;
    c["gmax"] = g;
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    emit_json("table", c, a, pass);
  } else {
    std::cout << render_table(rows, parse_table_format(o.format));
  }
  return pass ? kOk : kFailed;
}

int cmd_experiment(const Options& o) {
  const int n = o.n_max < 0 ? (o.experiment == "span" ? 5 : 4) : o.n_max;
  check_bound("n", n, 5, o.unsafe);
  Json c = base_config(o);
  c["name"] = o.experiment;
  c["n"] = n;
  c["max_size"] = o.max_size;
  if (o.experiment == "expansions") {
    const auto rows = compare_expansions(n, o.max_size);
    if (json_output(o)) {
      Json a = Json::array();
      for (const auto& r : rows)
        a.push_back(Json{{"function", r.function}, {"n", r.n}, {"expressible", r.expressible}, {"agree", r.agree},
                         {"rewrite", r.rewrite}, {"direct", r.direct}, {"rewritten", r.rewritten}});
      emit_json("experiment", c, a, true);
    } else {
      for (const auto& r : rows) {
        std::cout << "n=" << r.n << ' ' << r.function << ": T = " << r.direct;
        if (!r.expressible) std::cout << "; no rewrite in the e basis\n";
        else
          std::cout << "; as " << r.rewrite << ": T = " << r.rewritten << (r.agree ? " (agree)" : " (DIFFER)") << '\n';
      }
    }
  } else if (o.experiment == "span") {
    const auto rows = span_dimensions(n, o.max_size);
    if (json_output(o)) {
      Json a = Json::array();
      for (const auto& r : rows)
        a.push_back(Json{{"n", r.n}, {"max_size", r.max_size}, {"span", r.span}, {"algebra", r.algebra}, {"centre", r.centre}});
      emit_json("experiment", c, a, true);
    } else {
      for (const auto& r : rows)
        std::cout << "n=" << r.n << " span=" << r.span << " algebra=" << r.algebra << " centre=" << r.centre << '\n';
    }
  } else {
    throw UsageError("unknown experiment '" + o.experiment + "' (expansions, span)");
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star factorisations, monotone double Hurwitz factorisations and Jucys-Murphy elements"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text, json, csv or markdown")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown", "md"}));
  app.add_flag("--unsafe-bounds", o.unsafe, "Lift the size bounds");
  app.add_option("--threads", o.threads, "Worker threads (overrides STARFACT_THREADS)");

  auto global = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, json, csv or markdown")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown", "md"}));
    sub->add_flag("--unsafe-bounds", o.unsafe, "Lift the size bounds");
    sub->add_option("--threads", o.threads, "Worker threads (overrides STARFACT_THREADS)");
  };
  auto target_opts = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "star, monotone, md (or b for count)");
    sub->add_option("--target", o.target, "Permutation in cycle notation, e.g. \"(1 2)(3)\"");
    sub->add_option("--partition", o.partition, "Cycle type, e.g. \"[3,1,1]\"");
    sub->add_option("--n", o.n, "Degree when the target leaves trailing fixed points implicit");
    sub->add_option("--genus", o.genus, "Genus");
    sub->add_option("--root", o.root, "Root of the star (default n)");
    sub->add_option("--order", o.order, "Total order, e.g. \"3<2<1\"");
  };

  auto* count = app.add_subcommand("count", "Count factorisations");
  target_opts(count);
  count->add_option("--method", o.method, "auto, dp, listing, formula or all");
  global(count);

  auto* enumerate = app.add_subcommand("enumerate", "List factorisations");
  target_opts(enumerate);
  global(enumerate);

  auto* trace = app.add_subcommand("trace", "Trace a bijection move by move");
  trace->add_option("--bijection", o.bijection, "gamma, lambda_j, lambda, delta, theta or reroot")->required();
  trace->add_option("--target", o.target, "Target permutation (gamma, reroot)");
  trace->add_option("--n", o.n, "Degree");
  trace->add_option("--legs", o.legs, "Star legs, e.g. \"1,2,1\"");
  trace->add_option("--root", o.root, "Star root (default n)");
  trace->add_option("--to", o.to, "New root (reroot)");
  trace->add_option("--factors", o.factors, "Transpositions, e.g. \"(1 2)(1 3)\"");
  trace->add_option("--order", o.order, "Total order the input is monotone under (lambda_j, lambda)");
  trace->add_option("--j", o.j, "Swap index (lambda_j)");
  trace->add_option("--sigma", o.sigma, "Full cycle (theta)");
  trace->add_option("--by", o.by, "Conjugating permutation (delta, theta)");
  global(trace);

  auto* algebra = app.add_subcommand("algebra", "Evaluate an expression in the group algebra");
  algebra->add_option("--n", o.n, "Degree")->required();
  algebra->add_option("--expr", o.expr, "Expression, e.g. \"T(J[4]^4)\"")->required();
  global(algebra);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name or all")->required();
  verify->add_option("--n", o.n_max, "Degree bound");
  verify->add_option("--gmax", o.g_max, "Genus bound");
  verify->add_option("--kmax", o.k_max, "Exponent bound");
  verify->add_option("--list-n", o.list_n, "Degree bound for listing checks");
  verify->add_option("--list-g", o.list_g, "Genus bound for listing checks");
  global(verify);

  auto* table = app.add_subcommand("table", "Counts by every method, per cycle type and genus");
  table->add_option("--n", o.n_max, "Degree bound (default 5)");
  table->add_option("--gmax", o.g_max, "Genus bound (default 2)");
  global(table);

  auto* experiment = app.add_subcommand("experiment", "Exploratory computations");
  experiment->add_option("--name", o.experiment, "expansions or span")->required();
  experiment->add_option("--n", o.n_max, "Degree bound");
  experiment->add_option("--max-size", o.max_size, "Largest |lambda|");
  global(experiment);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (o.threads > 0) setenv("STARFACT_THREADS", std::to_string(o.threads).c_str(), 1);
  if (o.format == "md") o.format = "markdown";
  if ((o.format == "csv" || o.format == "markdown") && !table->parsed()) {
    std::cerr << "error: --format " << o.format << " applies to table only\n";
    return kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (trace->parsed()) return cmd_trace(o);
    if (algebra->parsed()) return cmd_algebra(o);
    if (verify->parsed()) return cmd_verify(o);
    if (table->parsed()) return cmd_table(o);
    if (experiment->parsed()) return cmd_experiment(o);
  } catch (const BoundsError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
