#pragma once

#include <string>
#include <string_view>

#include "banzhaf/game.hpp"

namespace banzhaf {

enum class GameFormat { bracket, json };

/// Parses either game notation:
///   bracket  [3; 2, 1, 1]
///   json     {"quota": 3, "weights": [2, 1, 1]}
/// Whitespace-insensitive; only integers are accepted. Throws SyntaxError
/// (with position) on malformed text and validation errors from the game
/// constructor otherwise.
WeightedVotingGame parse_game(std::string_view text);

/// Canonical rendering; parse_game(render_game(g, f)) reproduces g.
std::string render_game(const WeightedVotingGame& game,
                        GameFormat format = GameFormat::bracket);

/// Reads the whole file ("-" means standard input) and parses it.
WeightedVotingGame load_game_file(const std::string& path);

}  // namespace banzhaf
