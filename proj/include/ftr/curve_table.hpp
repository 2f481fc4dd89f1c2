#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ftr::cli {

/// Renders a double with 17 significant digits, enough to round-trip the
/// exact bit pattern through text.
std::string format_g17(double v);

/// A sampled curve: named numeric columns plus a metadata block recording
/// every parameter needed to regenerate the table.
struct CurveTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;  // insertion order
  std::vector<std::string> row_labels;  // optional; emitted as a leading column

  void set_meta(const std::string& key, const std::string& value);
  void set_meta(const std::string& key, double value);
  void set_meta(const std::string& key, std::uint64_t value);
  void add_row(std::vector<double> row);
  void add_labeled_row(std::string label, std::vector<double> row);

  /// CSV: '#'-prefixed key=value metadata lines, a header row, then data.
  void write_csv(std::ostream& os) const;
  /// JSON object mirroring the CSV structure.
  void write_json(std::ostream& os) const;

  /// Parses the CSV form of a numeric (unlabeled) table.
  static CurveTable read_csv(std::istream& is);
};

}  // namespace ftr::cli
