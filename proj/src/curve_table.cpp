#include "ftr/curve_table.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ftr::cli {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CurveTable::set_meta(const std::string& key, const std::string& value) {
  metadata.emplace_back(key, value);
}

void CurveTable::set_meta(const std::string& key, double value) {
  metadata.emplace_back(key, format_g17(value));
}

void CurveTable::set_meta(const std::string& key, std::uint64_t value) {
  metadata.emplace_back(key, std::to_string(value));
}

void CurveTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("CurveTable: row arity does not match header");
  rows.push_back(std::move(row));
}

void CurveTable::add_labeled_row(std::string label, std::vector<double> row) {
  add_row(std::move(row));
  row_labels.push_back(std::move(label));
}

void CurveTable::write_csv(std::ostream& os) const {
  for (const auto& [key, value] : metadata) os << "# " << key << "=" << value << "\n";
  const bool labeled = !row_labels.empty();
  if (labeled && row_labels.size() != rows.size())
    throw std::logic_error("CurveTable: label count does not match row count");
  if (labeled) os << "name,";
  for (std::size_t i = 0; i < columns.size(); ++i)
    os << columns[i] << (i + 1 < columns.size() ? "," : "");
  os << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (labeled) os << row_labels[r] << ",";
    for (std::size_t i = 0; i < rows[r].size(); ++i)
      os << format_g17(rows[r][i]) << (i + 1 < rows[r].size() ? "," : "");
    os << "\n";
  }
}

void CurveTable::write_json(std::ostream& os) const {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta;
  for (const auto& [key, value] : metadata) meta[key] = value;
  doc["metadata"] = std::move(meta);
  doc["columns"] = columns;
  if (!row_labels.empty()) doc["row_labels"] = row_labels;
  doc["rows"] = rows;
  os << doc.dump(2) << "\n";
}

CurveTable CurveTable::read_csv(std::istream& is) {
  CurveTable table;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body[0] == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq != std::string::npos)
        table.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      continue;
    }
    std::stringstream cells(line);
    std::string cell;
    if (!header_seen) {
      while (std::getline(cells, cell, ',')) table.columns.push_back(cell);
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) {
      // strtod instead of stod: subnormal values parse without the ERANGE throw
      char* end = nullptr;
      const double value = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str())
        throw std::invalid_argument("CurveTable: non-numeric cell: " + cell);
      row.push_back(value);
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace ftr::cli
