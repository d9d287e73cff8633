#pragma once

#include <optional>
#include <string>
#include <vector>

#include "richardson/classifier.hpp"
#include <json.hpp>

namespace richardson {

/// Flat view of a ClassificationReport with stable field names and order:
/// kind, coloring, blocks, central, nice, birational, sl2, normal, partition,
/// orbit_dim, covering_degree, label.
struct OutputRecord {
  std::string kind;
  std::vector<int> coloring;
  std::optional<std::vector<int>> blocks;  // absent for exceptional kinds
  std::optional<int> central;
  bool nice = false;
  bool birational = false;
  bool sl2 = false;
  std::optional<std::string> normal;  // "normal", "not_normal", "out_of_scope"
  std::optional<std::vector<int>> partition;
  std::optional<int> orbit_dim;
  std::optional<int> covering_degree;
  std::optional<std::string> label;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord to_record(const ClassificationReport& rep);

nlohmann::ordered_json to_json(const OutputRecord& rec);
/// Throws kParseError on missing keys or wrong types.
OutputRecord record_from_json(const nlohmann::json& j);

/// Lists are written "(a;b;c)"; an absent value is an empty field.
std::string csv_header();
std::string to_csv_row(const OutputRecord& rec);
OutputRecord record_from_csv_row(const std::string& line);

/// Human-readable table with a header row.
std::string format_table(const std::vector<OutputRecord>& recs);
/// Field-per-line layout for a single report, followed by its diagnostics.
std::string format_report(const ClassificationReport& rep);

}  // namespace richardson
