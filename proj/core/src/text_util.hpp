#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gdf/error.hpp"
#include "gdf/graph.hpp"

namespace gdf::detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Calls fn(1-based line number, tokens) for every line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    fn(lineno, split_ws(text.substr(start, end - start)));
    if (end == text.size()) break;
    start = end + 1;
  }
}

inline std::int64_t parse_int(const std::string& tok, std::size_t lineno) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(lineno, "expected an integer, got `" + tok + "`");
  }
  return value;
}

inline std::size_t parse_count(const std::string& tok, std::size_t lineno) {
  auto v = parse_int(tok, lineno);
  if (v < 0) throw ParseError(lineno, "expected a nonnegative count, got `" + tok + "`");
  return static_cast<std::size_t>(v);
}

/// 1-based on the wire, 0-based in memory.
inline Vertex parse_vertex(const std::string& tok, std::size_t n, std::size_t lineno) {
  auto v = parse_int(tok, lineno);
  if (v < 1 || static_cast<std::size_t>(v) > n) {
    throw ParseError(lineno, "vertex " + tok + " outside [1," + std::to_string(n) + "]");
  }
  return static_cast<Vertex>(v - 1);
}

}  // namespace gdf::detail
