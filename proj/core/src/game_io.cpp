#include "banzhaf/game_io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace banzhaf {

namespace {

class BracketParser {
public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  WeightedVotingGame parse() {
    skip_ws();
    expect('[');
    const Weight quota = integer("quota");
    skip_ws();
    expect(';');
    std::vector<Weight> weights;
    skip_ws();
    if (peek() != ']') {
      weights.push_back(integer("weight"));
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        weights.push_back(integer("weight"));
        skip_ws();
      }
    }
    expect(']');
    skip_ws();
    if (pos_ != text_.size()) {
      throw SyntaxError("trailing characters after game", pos_);
    }
    return WeightedVotingGame(quota, std::move(weights));
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  Weight integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw SyntaxError(std::string("expected integer ") + what, pos_);
    }
    unsigned __int128 value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      if (value > static_cast<unsigned __int128>(INT64_MAX)) {
        throw SyntaxError(std::string(what) + " out of machine-word range",
                          start);
      }
      ++pos_;
    }
    if (peek() == '.') {
      throw SyntaxError(std::string(what) + " must be an integer", pos_);
    }
    const auto magnitude = static_cast<std::int64_t>(value);
    return negative ? -magnitude : magnitude;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

WeightedVotingGame parse_json_game(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("quota") || !doc.contains("weights")) {
    throw SyntaxError("expected object with \"quota\" and \"weights\"", 0);
  }
  if (!doc["quota"].is_number_integer()) {
    throw SyntaxError("\"quota\" must be an integer", 0);
  }
  if (!doc["weights"].is_array()) {
    throw SyntaxError("\"weights\" must be an array of integers", 0);
  }
  const Weight quota = doc["quota"].get<std::int64_t>();
  std::vector<Weight> weights;
  weights.reserve(doc["weights"].size());
  for (const auto& w : doc["weights"]) {
    if (!w.is_number_integer()) {
      throw SyntaxError("\"weights\" must be an array of integers", 0);
    }
    weights.push_back(w.get<std::int64_t>());
  }
  return WeightedVotingGame(quota, std::move(weights));
}

}  // namespace

WeightedVotingGame parse_game(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i == text.size()) throw SyntaxError("empty input", i);
  if (text[i] == '{') return parse_json_game(text);
  if (text[i] == '[') return BracketParser(text).parse();
  throw SyntaxError("expected '[' (bracket form) or '{' (json form)", i);
}

std::string render_game(const WeightedVotingGame& game, GameFormat format) {
  std::ostringstream out;
  if (format == GameFormat::bracket) {
    out << '[' << game.quota() << ';';
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      out << (i == 0 ? " " : ", ") << game.weight(i);
    }
    out << ']';
  } else {
    out << "{\"quota\": " << game.quota() << ", \"weights\": [";
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      if (i) out << ", ";
      out << game.weight(i);
    }
    out << "]}";
  }
  return out.str();
}

WeightedVotingGame load_game_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::SyntaxError, "cannot open game file: " + path);
    }
    buffer << in.rdbuf();
  }
  return parse_game(buffer.str());
}

}  // namespace banzhaf
