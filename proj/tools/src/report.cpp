#include <cstdlib>
#include <string>

#include <json.hpp>

#include "latlab/format.hpp"
#include "latlab/frozen.hpp"
#include "latlab_cli/cli.hpp"

namespace latlab::cli {

namespace {

using json = nlohmann::ordered_json;

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

// Numbers go through the 12-digit text form so JSON and CSV agree digit for digit.
json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return format_number(*d);
    return std::strtod(format_number(*d).c_str(), nullptr);
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string csv(const Table& t) {
  CsvTable out;
  out.header = t.header;
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& c : row) cells.push_back(cell_text(c));
    out.rows.push_back(std::move(cells));
  }
  return out.str();
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < t.header.size() && i < row.size(); ++i) r[t.header[i]] = cell_json(row[i]);
    rows.push_back(std::move(r));
  }
  return rows;
}

json provenance_json() {
  json arr = json::array();
  for (const auto& p : frozen::all_provenance()) {
    arr.push_back({{"name", p.name},
                   {"generated_by", p.generated_by},
                   {"date", p.date},
                   {"grid", p.grid},
                   {"notes", p.notes}});
  }
  return arr;
}

}  // namespace

std::map<std::string, std::string> render(const SuiteResult& result, Format format) {
  std::map<std::string, std::string> files;
  json summary;
  summary["suite"] = result.suite;
  json grid = json::object();
  for (const auto& [key, values] : result.grid) {
    json v = json::array();
    for (double x : values) v.push_back(cell_json(x));
    grid[key] = std::move(v);
  }
  summary["grid"] = std::move(grid);
  json crit = json::array();
  bool ok = true;
  for (const auto& c : result.criteria) {
    crit.push_back({{"id", c.id},
                    {"description", c.description},
                    {"hard", c.hard},
                    {"passed", c.passed},
                    {"detail", c.detail}});
    if (c.hard && !c.passed) ok = false;
  }
  summary["passed"] = ok && !result.partial;
  summary["partial"] = result.partial;
  if (!result.note.empty()) summary["note"] = result.note;
  summary["criteria"] = std::move(crit);
  summary["provenance"] = provenance_json();

  json tables = json::array();
  for (const auto& t : result.tables) {
    if (format == Format::csv) {
      files[t.name + ".csv"] = csv(t);
    } else {
      json doc;
      doc["table"] = t.name;
      doc["columns"] = t.header;
      doc["rows"] = table_json(t);
      doc["provenance"] = provenance_json();
      files[t.name + ".json"] = doc.dump(2) + "\n";
    }
    tables.push_back(t.name + (format == Format::csv ? ".csv" : ".json"));
  }
  for (const auto& [name, content] : result.files) {
    files[name] = content;
    tables.push_back(name);
  }
  summary["files"] = std::move(tables);
  files[result.suite + "_summary.json"] = summary.dump(2) + "\n";
  return files;
}

}  // namespace latlab::cli
