#pragma once

// Text and JSON renderings of factorisations, decompositions and tables.

#include "starfact/factorisations.hpp"
#include "starfact/group_algebra.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace starfact {

using Json = nlohmann::ordered_json;

/// Counts as JSON numbers when they fit in 64 bits, else as decimal strings.
Json to_json(const Integer& x);

// One factorisation per line: the factors in cycle notation, "()" when empty.
// Monotone factors are written smaller-first under their order; a monotone
// double factorisation is written "sigma | tail".
std::string to_line(const StarFactorisation& f);
std::string to_line(const MonotoneFactorisation& f);
std::string to_line(const MonotoneDoubleFactorisation& f);

// {family, n, root, genus, target, factors}; monotone adds "order", monotone
// double adds "sigma". root is null outside the star family.
Json to_json(const StarFactorisation& f);
Json to_json(const MonotoneFactorisation& f);
Json to_json(const MonotoneDoubleFactorisation& f);

/// Partition strings mapped to coefficients, in rendering order.
Json to_json(const ClassSumDecomposition& d);

struct TableRow {
  Partition lambda;
  int genus = 0;
  Integer count_star;
  Integer md_count;
  Integer feray;
  std::optional<Integer> md_closed_form;  // full cycles and the identity only
  bool all_agree = false;
};

enum class TableFormat { text, csv, json, markdown };

TableFormat parse_table_format(const std::string& name);
std::string render_table(const std::vector<TableRow>& rows, TableFormat format);
Json to_json(const TableRow& row);

} // namespace starfact
