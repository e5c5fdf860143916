#include "tradebloc/report.hpp"

#include <cstdlib>

#include <json.hpp>

namespace tradebloc {

namespace {

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json cell_to_json(const Cell& cell) {
  switch (cell.kind) {
    case Cell::Kind::kBlank:
      return nullptr;
    case Cell::Kind::kInt:
      return cell.int_value;
    case Cell::Kind::kNumber:
      return std::strtod(cell.text.c_str(), nullptr);
    case Cell::Kind::kText:
      break;
  }
  return cell.text;
}

}  // namespace

std::string render_csv(const Report& report) {
  std::string out;
  for (size_t b = 0; b < report.blocks.size(); ++b) {
    if (b) out += '\n';
    const Table& table = report.blocks[b];
    for (size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(table.columns[c]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += csv_escape(row[c].text);
      }
      out += '\n';
    }
  }
  return out;
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json root;
  root["command"] = report.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, cell] : report.params) params[name] = cell_to_json(cell);
  root["params"] = std::move(params);
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const Table& table : report.blocks) {
    nlohmann::ordered_json block;
    block["name"] = table.name;
    block["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json cells = nlohmann::ordered_json::array();
      for (const Cell& cell : row) cells.push_back(cell_to_json(cell));
      rows.push_back(std::move(cells));
    }
    block["rows"] = std::move(rows);
    blocks.push_back(std::move(block));
  }
  root["blocks"] = std::move(blocks);
  return root.dump(2) + "\n";
}

}  // namespace tradebloc
