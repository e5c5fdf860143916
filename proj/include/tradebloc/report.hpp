#ifndef TRADEBLOC_REPORT_HPP
#define TRADEBLOC_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace tradebloc {

// One output cell. Numbers carry their presentation string (already rounded
// to the configured significant figures); rounding never happens twice.
struct Cell {
  enum class Kind { kBlank, kInt, kNumber, kText };
  Kind kind = Kind::kBlank;
  long long int_value = 0;
  std::string text;

  static Cell blank() { return {}; }
  static Cell integer(long long v) { return {Kind::kInt, v, std::to_string(v)}; }
  static Cell number(std::string formatted) { return {Kind::kNumber, 0, std::move(formatted)}; }
  static Cell of_text(std::string v) { return {Kind::kText, 0, std::move(v)}; }
  static Cell yes_no(bool v) { return of_text(v ? "yes" : "no"); }

  bool operator==(const Cell&) const = default;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<Table> blocks;
};

// Blocks become CSV tables separated by one blank line; cells containing
// commas or quotes are quoted RFC-4180 style.
std::string render_csv(const Report& report);

// Single JSON object {command, params, blocks}; numbers are emitted as JSON
// numbers parsed back from their presentation strings.
std::string render_json(const Report& report);

}  // namespace tradebloc

#endif  // TRADEBLOC_REPORT_HPP
