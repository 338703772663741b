#include "starfact/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace starfact;

namespace {

std::string failures(const SuiteReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.pass) out += c.name + ": " + c.detail + "\n";
  return out;
}

} // namespace

TEST_CASE("every suite passes at small bounds") {
  for (const auto& name : suite_names()) {
    SuiteConfig c;
    c.n_max = 3;
    c.g_max = 1;
    c.k_max = 1;
    c.list_n_max = 3;
    c.list_g_max = 1;
    const SuiteReport r = run_suite(name, c);
    CAPTURE(name);
    CAPTURE(failures(r));
    CHECK_FALSE(r.checks.empty());
    CHECK(r.pass());
    CHECK(r.to_json()["pass"] == true);
  }
}

TEST_CASE("suite configuration") {
  CHECK(suite_names().size() == 9);
  CHECK_THROWS_AS(run_suite("nonsense", {}), std::invalid_argument);
  SuiteConfig c;
  c.n_max = 4;
  CHECK_THROWS_AS(run_suite("relation-6.4", c), BoundsError);
  c.n_max = 7;
  CHECK_THROWS_AS(run_suite("theorem-1.4", c), BoundsError);
  CHECK_THROWS_WITH_AS(check_bound("n", 4, 3, false), "n = 4 exceeds the bound n <= 3 (pass --unsafe-bounds to override)",
                       BoundsError);
  CHECK_NOTHROW(check_bound("n", 4, 3, true));
  const SuiteReport r = run_suite("recurrence-6.3", {});
  CHECK(r.config.n_max > 0);
  CHECK(r.config.g_max > 0);
}

TEST_CASE("a failing check fails the report") {
  SuiteReport r;
  r.checks.push_back({"a", "", true});
  CHECK(r.pass());
  r.checks.push_back({"b", "mismatch", false});
  CHECK_FALSE(r.pass());
  CHECK(r.to_json()["pass"] == false);
}

TEST_CASE("table rows agree") {
  const auto rows = build_table(4, 1);
  CHECK(rows.size() == 2 * (1 + 2 + 3 + 5));
  for (const auto& row : rows) CHECK(row.all_agree);
  const auto it = std::find_if(rows.begin(), rows.end(),
                               [](const TableRow& r) { return r.lambda == Partition({3}) && r.genus == 1; });
  REQUIRE(it != rows.end());
  CHECK(it->count_star == 5);
  CHECK(it->md_closed_form == Integer(5));
}

TEST_CASE("experiments") {
  const auto rows = compare_expansions(2, 2);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const ExpansionComparison& r) { return r.n == 2 && r.function == "p[2]"; });
  REQUIRE(it != rows.end());
  CHECK(it->expressible);
  CHECK_FALSE(it->agree);
  const auto spans = span_dimensions(3, 4);
  REQUIRE(spans.size() == 3);
  for (const auto& s : spans) CHECK(s.centre == static_cast<int>(partitions_of(s.n).size()));
}
