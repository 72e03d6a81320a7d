#pragma once

// Line-oriented tokenising shared by the graph, strategy and policy readers.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "scpr/error.hpp"

namespace scpr::detail {

struct Line {
  int number;  // 1-based
  std::vector<std::string_view> tokens;
};

// Splits into whitespace-separated tokens, dropping blank lines and lines
// whose first non-blank character is '#'. Views point into `text`.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() &&
             (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
        ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' &&
             raw[j] != '\r')
        ++j;
      line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty() && line.tokens.front().front() != '#')
      out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline std::string where(const Line& line) {
  return "line " + std::to_string(line.number);
}

inline long parse_int(const Line& line, std::size_t k) {
  std::string_view tok = line.tokens.at(k);
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(where(line) + ": expected an integer, got '" +
                     std::string(tok) + "'");
  return value;
}

inline double parse_real(const Line& line, std::size_t k) {
  std::string tok(line.tokens.at(k));
  char* end = nullptr;
  double value = std::strtod(tok.c_str(), &end);
  if (tok.empty() || end != tok.c_str() + tok.size())
    throw ParseError(where(line) + ": expected a decimal number, got '" + tok +
                     "'");
  return value;
}

inline void expect_fields(const Line& line, std::size_t count,
                          std::string_view what) {
  if (line.tokens.size() != count)
    throw ParseError(where(line) + ": '" + std::string(what) + "' expects " +
                     std::to_string(count - 1) + " fields, got " +
                     std::to_string(line.tokens.size() - 1));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace scpr::detail
