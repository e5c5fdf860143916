#include "tradebloc/regime_syntax.hpp"

#include <cctype>
#include <cstdlib>

namespace tradebloc {

namespace {

struct Token {
  std::string text;
  size_t position;  // 1-based offset of the first character
};

std::vector<Token> split(const std::string& text, char separator) {
  std::vector<Token> out;
  size_t start = 0;
  while (true) {
    size_t end = text.find(separator, start);
    size_t len = (end == std::string::npos ? text.size() : end) - start;
    out.push_back({text.substr(start, len), start + 1});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

Token trimmed(const Token& token) {
  size_t first = 0;
  size_t last = token.text.size();
  while (first < last && std::isspace(static_cast<unsigned char>(token.text[first]))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(token.text[last - 1]))) --last;
  return {token.text.substr(first, last - first), token.position + first};
}

int parse_country(const Token& token, int world_size) {
  if (token.text.empty()) throw SyntaxError("empty country id", token.position);
  for (char c : token.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw SyntaxError("bad country id '" + token.text + "'", token.position);
    }
  }
  long value = std::strtol(token.text.c_str(), nullptr, 10);
  if (value < 1 || value > world_size) {
    throw SyntaxError("country id '" + token.text + "' outside 1.." + std::to_string(world_size),
                      token.position);
  }
  return static_cast<int>(value - 1);
}

}  // namespace

std::vector<std::vector<int>> parse_bloc_list(const std::string& text, int world_size) {
  if (text.empty()) throw SyntaxError("empty bloc list", 1);
  std::vector<std::vector<int>> blocs;
  for (const Token& bloc_token : split(text, '|')) {
    std::vector<int> members;
    for (const Token& raw : split(bloc_token.text, ',')) {
      Token item = trimmed({raw.text, bloc_token.position + raw.position - 1});
      size_t dash = item.text.find('-');
      if (dash == std::string::npos) {
        members.push_back(parse_country(item, world_size));
        continue;
      }
      Token lo{item.text.substr(0, dash), item.position};
      Token hi{item.text.substr(dash + 1), item.position + dash + 1};
      int from = parse_country(lo, world_size);
      int to = parse_country(hi, world_size);
      if (from > to) {
        throw SyntaxError("descending range '" + item.text + "'", item.position);
      }
      for (int c = from; c <= to; ++c) members.push_back(c);
    }
    blocs.push_back(std::move(members));
  }
  return blocs;
}

std::string format_blocs(const std::vector<std::vector<int>>& blocs) {
  std::string out;
  for (size_t b = 0; b < blocs.size(); ++b) {
    if (b) out += '|';
    const auto& bloc = blocs[b];
    size_t i = 0;
    while (i < bloc.size()) {
      size_t j = i;
      while (j + 1 < bloc.size() && bloc[j + 1] == bloc[j] + 1) ++j;
      if (i) out += ',';
      out += std::to_string(bloc[i] + 1);
      if (j > i) {
        out += '-';
        out += std::to_string(bloc[j] + 1);
      }
      i = j + 1;
    }
  }
  return out;
}

MoveOrder parse_move_order(const std::string& text, int world_size) {
  if (text == "identity" || text.empty()) return MoveOrder::identity(world_size);
  if (text == "reverse") return MoveOrder::reversed(world_size);
  std::vector<int> sequence;
  for (const Token& raw : split(text, ',')) {
    sequence.push_back(parse_country(trimmed(raw), world_size));
  }
  try {
    return MoveOrder::of(std::move(sequence), world_size);
  } catch (const InvalidParamsError& e) {
    throw SyntaxError(e.what(), 1);
  }
}

std::string format_move_order(const MoveOrder& order) {
  std::string out;
  for (size_t i = 0; i < order.sequence.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(order.sequence[i] + 1);
  }
  return out;
}

}  // namespace tradebloc
