#include "richardson/records.hpp"

#include <algorithm>
#include <sstream>

namespace richardson {

using nlohmann::json;
using nlohmann::ordered_json;

OutputRecord to_record(const ClassificationReport& rep) {
  OutputRecord rec;
  rec.kind = rep.kind.name();
  if (rep.coloring) rec.coloring = rep.coloring->u();
  if (rep.blocks) {
    rec.blocks = rep.blocks->d();
    rec.central = rep.blocks->central();
  }
  rec.nice = rep.nice;
  rec.birational = rep.birational;
  rec.sl2 = rep.sl2_given;
  if (rep.normal_closure) rec.normal = std::string(to_string(*rep.normal_closure));
  if (rep.partition) rec.partition = rep.partition->parts();
  rec.orbit_dim = rep.orbit_dim;
  rec.covering_degree = rep.covering_degree;
  rec.label = rep.bala_carter_label;
  return rec;
}

namespace {

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

std::string list_cell(const std::vector<int>& v) { return "(" + join_ints(v, ";") + ")"; }

std::vector<int> parse_list_cell(const std::string& cell) {
  if (cell.size() < 2 || cell.front() != '(' || cell.back() != ')')
    throw Error(ErrorCode::kParseError, "bad list cell '" + cell + "'");
  std::string inner = cell.substr(1, cell.size() - 2);
  std::replace(inner.begin(), inner.end(), ';', ',');
  return parse_int_list(inner);
}

std::optional<int> parse_int_cell(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  auto v = parse_int_list(cell);
  if (v.size() != 1) throw Error(ErrorCode::kParseError, "bad integer cell '" + cell + "'");
  return v.front();
}

bool parse_bool_cell(const std::string& cell) {
  if (cell == "true") return true;
  if (cell == "false") return false;
  throw Error(ErrorCode::kParseError, "bad boolean cell '" + cell + "'");
}

std::string dash(const std::optional<std::string>& s) { return s ? *s : "-"; }

std::string dash(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace

ordered_json to_json(const OutputRecord& rec) {
  ordered_json j;
  j["kind"] = rec.kind;
  j["coloring"] = rec.coloring;
  j["blocks"] = opt(rec.blocks);
  j["central"] = opt(rec.central);
  j["nice"] = rec.nice;
  j["birational"] = rec.birational;
  j["sl2"] = rec.sl2;
  j["normal"] = opt(rec.normal);
  j["partition"] = opt(rec.partition);
  j["orbit_dim"] = opt(rec.orbit_dim);
  j["covering_degree"] = opt(rec.covering_degree);
  j["label"] = opt(rec.label);
  return j;
}

OutputRecord record_from_json(const json& j) {
  try {
    OutputRecord rec;
    rec.kind = j.at("kind").get<std::string>();
    rec.coloring = j.at("coloring").get<std::vector<int>>();
    rec.blocks = get_opt<std::vector<int>>(j, "blocks");
    rec.central = get_opt<int>(j, "central");
    rec.nice = j.at("nice").get<bool>();
    rec.birational = j.at("birational").get<bool>();
    rec.sl2 = j.at("sl2").get<bool>();
    rec.normal = get_opt<std::string>(j, "normal");
    rec.partition = get_opt<std::vector<int>>(j, "partition");
    rec.orbit_dim = get_opt<int>(j, "orbit_dim");
    rec.covering_degree = get_opt<int>(j, "covering_degree");
    rec.label = get_opt<std::string>(j, "label");
    return rec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad record: ") + e.what());
  }
}

std::string csv_header() {
  return "kind,coloring,blocks,central,nice,birational,sl2,normal,partition,"
         "orbit_dim,covering_degree,label";
}

std::string to_csv_row(const OutputRecord& rec) {
  std::vector<std::string> cells = {
      rec.kind,
      list_cell(rec.coloring),
      rec.blocks ? list_cell(*rec.blocks) : "",
      rec.central ? std::to_string(*rec.central) : "",
      rec.nice ? "true" : "false",
      rec.birational ? "true" : "false",
      rec.sl2 ? "true" : "false",
      rec.normal.value_or(""),
      rec.partition ? list_cell(*rec.partition) : "",
      rec.orbit_dim ? std::to_string(*rec.orbit_dim) : "",
      rec.covering_degree ? std::to_string(*rec.covering_degree) : "",
      rec.label.value_or(""),
  };
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

OutputRecord record_from_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  if (cells.size() != 12)
    throw Error(ErrorCode::kParseError,
                "expected 12 CSV cells, got " + std::to_string(cells.size()));
  OutputRecord rec;
  rec.kind = cells[0];
  rec.coloring = parse_list_cell(cells[1]);
  if (!cells[2].empty()) rec.blocks = parse_list_cell(cells[2]);
  rec.central = parse_int_cell(cells[3]);
  rec.nice = parse_bool_cell(cells[4]);
  rec.birational = parse_bool_cell(cells[5]);
  rec.sl2 = parse_bool_cell(cells[6]);
  if (!cells[7].empty()) rec.normal = cells[7];
  if (!cells[8].empty()) rec.partition = parse_list_cell(cells[8]);
  rec.orbit_dim = parse_int_cell(cells[9]);
  rec.covering_degree = parse_int_cell(cells[10]);
  if (!cells[11].empty()) rec.label = cells[11];
  return rec;
}

std::string format_table(const std::vector<OutputRecord>& recs) {
  std::vector<std::vector<std::string>> rows = {
      {"kind", "coloring", "blocks", "central", "nice", "birational", "sl2",
       "normal", "partition", "orbit_dim", "cover", "label"}};
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  for (const auto& r : recs)
    rows.push_back({r.kind, "(" + join_ints(r.coloring) + ")",
                    r.blocks ? "(" + join_ints(*r.blocks) + ")" : "-", dash(r.central),
                    yn(r.nice), yn(r.birational), yn(r.sl2), dash(r.normal),
                    r.partition ? "(" + join_ints(*r.partition) + ")" : "-",
                    dash(r.orbit_dim), dash(r.covering_degree), dash(r.label)});
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string format_report(const ClassificationReport& rep) {
  const OutputRecord r = to_record(rep);
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  std::vector<std::pair<std::string, std::string>> rows = {
      {"kind", r.kind},
      {"coloring", "(" + join_ints(r.coloring) + ")"},
  };
  if (r.blocks) {
    rows.emplace_back("blocks", "(" + join_ints(*r.blocks) + ")");
    rows.emplace_back("central", dash(r.central));
  }
  rows.emplace_back("nice", yn(r.nice));
  rows.emplace_back("birational", yn(r.birational));
  rows.emplace_back("sl2", yn(r.sl2));
  if (r.normal) rows.emplace_back("normal", *r.normal);
  rows.emplace_back("partition", r.partition ? "(" + join_ints(*r.partition) + ")" : "-");
  if (!rep.partition_source.empty()) rows.emplace_back("partition_source", rep.partition_source);
  if (rep.oracle_certified)
    rows.emplace_back("oracle_certified", yn(*rep.oracle_certified));
  rows.emplace_back("orbit_dim", dash(r.orbit_dim));
  rows.emplace_back("covering_degree", dash(r.covering_degree));
  if (r.label) rows.emplace_back("label", *r.label);

  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(w - k.size() + 2, ' ') + v + "\n";
  for (const auto& d : rep.diagnostics) out += "note: " + d + "\n";
  return out;
}

}  // namespace richardson
