#ifndef TRADEBLOC_REGIME_SYNTAX_HPP
#define TRADEBLOC_REGIME_SYNTAX_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "tradebloc/sequential_game.hpp"

namespace tradebloc {

// Malformed bloc/order strings are usage errors, not model errors; the message
// carries the offending token and its 1-based position in the input.
struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& message, size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position(position) {}
  size_t position;
};

// Bloc syntax: members comma-separated with 1-based ids and ranges ("1-5"),
// blocs joined by '|'; e.g. "1-5|6|7|8". Returns 0-based member lists without
// regime-level validation (that belongs to FtaRegime / CuRegime).
std::vector<std::vector<int>> parse_bloc_list(const std::string& text, int world_size);

// Canonical rendering of bloc lists; runs of consecutive ids collapse to
// ranges, e.g. "1-5|6|7|8".
std::string format_blocs(const std::vector<std::vector<int>>& blocs);

// "identity", "reverse", or a comma list of 1-based country ids.
MoveOrder parse_move_order(const std::string& text, int world_size);

std::string format_move_order(const MoveOrder& order);

}  // namespace tradebloc

#endif  // TRADEBLOC_REGIME_SYNTAX_HPP
