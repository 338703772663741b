#include "starfact/serialize.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace starfact {

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(x.convert_to<std::int64_t>());
  return Json(x.str());
}

namespace {

Json factor_array(const std::vector<Transposition>& factors, const TotalOrder* order) {
  Json a = Json::array();
  for (const auto& t : factors) a.push_back(order ? t.to_string(*order) : t.to_string());
  return a;
}

} // namespace

std::string to_line(const StarFactorisation& f) { return to_string(f.factors()); }

std::string to_line(const MonotoneFactorisation& f) { return to_string(f.factors, f.order); }

std::string to_line(const MonotoneDoubleFactorisation& f) {
  return f.sigma.to_string() + " | " + to_string(f.factors);
}

Json to_json(const StarFactorisation& f) {
  Json j;
  j["family"] = "star";
  j["n"] = f.n;
  j["root"] = f.root;
  j["genus"] = f.genus;
  j["target"] = f.target.to_string();
  j["factors"] = factor_array(f.factors(), nullptr);
  return j;
}

Json to_json(const MonotoneFactorisation& f) {
  Json j;
  j["family"] = "monotone";
  j["n"] = f.degree();
  j["root"] = nullptr;
  j["genus"] = f.genus;
  j["target"] = f.target.to_string();
  j["factors"] = factor_array(f.factors, &f.order);
  j["order"] = f.order.to_string();
  return j;
}

Json to_json(const MonotoneDoubleFactorisation& f) {
  Json j;
  j["family"] = "monotone-double";
  j["n"] = f.degree();
  j["root"] = nullptr;
  j["genus"] = f.genus;
  j["target"] = f.target.to_string();
  j["factors"] = factor_array(f.factors, nullptr);
  j["sigma"] = f.sigma.to_string();
  return j;
}

Json to_json(const ClassSumDecomposition& d) {
  Json j = Json::object();
  for (const auto& lambda : ordered_classes(d)) j[lambda.to_string()] = to_json(d.at(lambda));
  return j;
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "text") return TableFormat::text;
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  throw std::invalid_argument("unknown table format '" + name + "' (text, csv, json, markdown)");
}

Json to_json(const TableRow& row) {
  Json j;
  j["lambda"] = row.lambda.to_string();
  j["g"] = row.genus;
  j["count_star"] = to_json(row.count_star);
  j["md_count"] = to_json(row.md_count);
  j["feray"] = to_json(row.feray);
  j["md_closed_form"] = row.md_closed_form ? to_json(*row.md_closed_form) : Json(nullptr);
  j["all_agree"] = row.all_agree;
  return j;
}

std::string render_table(const std::vector<TableRow>& rows, TableFormat format) {
  static const char* header[] = {"lambda", "g", "count_star", "md_count", "feray", "md_closed_form", "all_agree"};
  auto cells = [](const TableRow& r) {
    return std::vector<std::string>{r.lambda.to_string(),
                                    std::to_string(r.genus),
                                    r.count_star.str(),
                                    r.md_count.str(),
                                    r.feray.str(),
                                    r.md_closed_form ? r.md_closed_form->str() : "",
                                    r.all_agree ? "true" : "false"};
  };
  std::ostringstream out;
  switch (format) {
    case TableFormat::json: {
      Json a = Json::array();
      for (const auto& r : rows) a.push_back(to_json(r));
      out << a.dump(2) << '\n';
      break;
    }
    case TableFormat::csv: {
      for (int c = 0; c < 7; ++c) out << (c ? "," : "") << header[c];
      out << '\n';
      for (const auto& r : rows) {
        const auto v = cells(r);
        // Partitions contain commas, so quote them.
        out << '"' << v[0] << '"';
        for (std::size_t c = 1; c < v.size(); ++c) out << ',' << v[c];
        out << '\n';
      }
      break;
    }
    case TableFormat::markdown: {
      out << "|";
      for (const char* h : header) out << ' ' << h << " |";
      out << "\n|";
      for (int c = 0; c < 7; ++c) out << (c < 2 ? " --- |" : " ---: |");
      out << '\n';
      for (const auto& r : rows) {
        out << "|";
        for (const auto& v : cells(r)) out << ' ' << (v.empty() ? "-" : v) << " |";
        out << '\n';
      }
      break;
    }
    case TableFormat::text: {
      std::vector<std::size_t> width(7);
      for (int c = 0; c < 7; ++c) width[c] = std::string(header[c]).size();
      for (const auto& r : rows) {
        const auto v = cells(r);
        for (int c = 0; c < 7; ++c) width[c] = std::max(width[c], v[c].size());
      }
      auto line = [&](const std::vector<std::string>& v) {
        for (int c = 0; c < 7; ++c) {
          out << (c ? "  " : "") << v[c];
          if (c < 6) out << std::string(width[c] - v[c].size(), ' ');
        }
        out << '\n';
      };
      line(std::vector<std::string>(std::begin(header), std::end(header)));
      for (const auto& r : rows) line(cells(r));
      break;
    }
  }
  return out.str();
}

} // namespace starfact
