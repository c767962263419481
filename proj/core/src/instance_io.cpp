#include "gdf/instance_io.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>

#include "gdf/error.hpp"
#include "gdf/graph_io.hpp"
#include "text_util.hpp"

namespace gdf {
namespace {

bool is_graph_line(const std::vector<std::string>& tok) {
  return !tok.empty() && (tok[0] == "p" || tok[0] == "e" || tok[0] == "c");
}

/// Keeps graph lines in place and blanks the rest so line numbers survive.
std::string graph_lines_only(std::string_view text) {
  std::string out;
  detail::for_each_line(text, [&](std::size_t, const std::vector<std::string>& tok) {
    if (is_graph_line(tok)) {
      for (std::size_t i = 0; i < tok.size(); ++i) out += (i ? " " : "") + tok[i];
    }
    out += '\n';
  });
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Per-vertex integer table with an optional default, e.g. `k default 1`.
template <class T>
class VertexTable {
 public:
  VertexTable(std::string name, std::size_t n) : name_(std::move(name)), values_(n) {}

  void set(const Line& line, T value) {
    if (line.tokens[1] == "default") {
      if (fallback_) throw ParseError(line.number, "second `" + name_ + " default` line");
      fallback_ = value;
      return;
    }
    const Vertex v = detail::parse_vertex(line.tokens[1], values_.size(), line.number);
    if (values_[v]) throw ParseError(line.number, "duplicate `" + name_ + "` for vertex " + line.tokens[1]);
    values_[v] = value;
  }

  std::vector<T> resolve(std::size_t lineno) const {
    std::vector<T> out(values_.size());
    for (std::size_t v = 0; v < values_.size(); ++v) {
      if (values_[v]) {
        out[v] = *values_[v];
      } else if (fallback_) {
        out[v] = *fallback_;
      } else {
        throw ParseError(lineno, "no `" + name_ + "` value for vertex " + std::to_string(v + 1) +
                                     " and no `" + name_ + " default` line");
      }
    }
    return out;
  }

 private:
  std::string name_;
  std::vector<std::optional<T>> values_;
  std::optional<T> fallback_;
};

Sense parse_sense(const Line& line) {
  if (line.tokens.size() != 2) throw ParseError(line.number, "expected `sense dominate|pack`");
  if (line.tokens[1] == "dominate") return Sense::Dominate;
  if (line.tokens[1] == "pack") return Sense::Pack;
  throw ParseError(line.number, "unknown sense `" + line.tokens[1] + "`");
}

void require_arity(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) throw ParseError(line.number, std::string("expected `") + shape + "`");
}

Label parse_label(const std::string& tok, std::size_t lineno) {
  if (tok == "F" || tok == "f") return kFree;
  return detail::parse_int(tok, lineno);
}

std::string label_text(const Label& l) { return l ? std::to_string(*l) : "F"; }

/// Most frequent value, smallest on ties.
template <class T, class Less = std::less<T>>
T mode_of(std::span<const T> values, T empty) {
  if (values.empty()) return empty;
  std::map<T, std::size_t, Less> counts;
  for (const auto& x : values) ++counts[x];
  return std::max_element(counts.begin(), counts.end(),
                          [](const auto& a, const auto& b) { return a.second < b.second; })
      ->first;
}

template <class T, class Fmt>
void write_table(std::ostringstream& out, const char* name, std::span<const T> values, T fallback, Fmt fmt) {
  out << name << " default " << fmt(fallback) << '\n';
  for (std::size_t v = 0; v < values.size(); ++v)
    if (!(values[v] == fallback)) out << name << ' ' << v + 1 << ' ' << fmt(values[v]) << '\n';
}

std::vector<Line> extra_lines(std::string_view text) {
  std::vector<Line> out;
  detail::for_each_line(text, [&](std::size_t lineno, const std::vector<std::string>& tok) {
    if (tok.empty() || is_graph_line(tok) || tok[0][0] == '#') return;
    out.push_back({lineno, tok});
  });
  return out;
}

std::size_t last_line(std::string_view text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

}  // namespace

Graph parse_graph_block(std::string_view text) { return parse_graph(graph_lines_only(text)); }

bool looks_like_instance(std::string_view text) {
  bool found = false;
  detail::for_each_line(text, [&](std::size_t, const std::vector<std::string>& tok) {
    if (!tok.empty() && (tok[0] == "sense" || tok[0] == "labelled")) found = true;
  });
  return found;
}

GenInstance parse_instance(std::string_view text) {
  Graph g = parse_graph_block(text);
  const std::size_t n = g.vertex_count();
  VertexTable<Value> k("k", n);
  VertexTable<Value> u("u", n);
  std::optional<Sense> sense;
  for (const auto& line : extra_lines(text)) {
    const auto& head = line.tokens[0];
    if (head == "k" || head == "u") {
      require_arity(line, 3, "k|u <v>|default <int>");
      (head == "k" ? k : u).set(line, detail::parse_int(line.tokens[2], line.number));
    } else if (head == "sense") {
      if (sense) throw ParseError(line.number, "second sense line");
      sense = parse_sense(line);
    } else {
      throw ParseError(line.number, "unrecognized line `" + head + "`");
    }
  }
  const std::size_t end = last_line(text);
  if (!sense) throw ParseError(end, "missing `sense dominate|pack` line");
  auto quota = k.resolve(end);
  auto cap = u.resolve(end);
  for (Vertex v = 0; v < n; ++v) {
    if (quota[v] < 0 || cap[v] < 0) {
      throw ParseError(end, "k and u must be nonnegative (vertex " + std::to_string(v + 1) + ")");
    }
  }
  return GenInstance(std::move(g), std::move(quota), std::move(cap), *sense);
}

std::string serialize_instance(const GenInstance& inst) {
  std::ostringstream out;
  out << serialize_graph(inst.graph());
  auto num = [](Value x) { return std::to_string(x); };
  write_table(out, "k", inst.quota(), mode_of(inst.quota(), Value{0}), num);
  write_table(out, "u", inst.cap(), mode_of(inst.cap(), Value{0}), num);
  out << "sense " << to_string(inst.sense()) << '\n';
  return out.str();
}

ParsedLabelled parse_labelled(std::string_view text) {
  Graph g = parse_graph_block(text);
  const std::size_t n = g.vertex_count();
  VertexTable<Label> t("t", n);
  VertexTable<Value> k("k", n);
  std::optional<std::array<Value, 3>> params;
  std::optional<Sense> sense;
  for (const auto& line : extra_lines(text)) {
    const auto& head = line.tokens[0];
    if (head == "labelled") {
      require_arity(line, 4, "labelled <I> <d> <l>");
      if (params) throw ParseError(line.number, "second labelled line");
      params = {detail::parse_int(line.tokens[1], line.number), detail::parse_int(line.tokens[2], line.number),
                detail::parse_int(line.tokens[3], line.number)};
    } else if (head == "t") {
      require_arity(line, 3, "t <v>|default F|<int>");
      t.set(line, parse_label(line.tokens[2], line.number));
    } else if (head == "k") {
      require_arity(line, 3, "k <v>|default <int>");
      k.set(line, detail::parse_int(line.tokens[2], line.number));
    } else if (head == "sense") {
      if (sense) throw ParseError(line.number, "second sense line");
      sense = parse_sense(line);
    } else {
      throw ParseError(line.number, "unrecognized line `" + head + "`");
    }
  }
  const std::size_t end = last_line(text);
  if (!params) throw ParseError(end, "missing `labelled <I> <d> <l>` line");
  try {
    return {LabelledInstance(std::move(g), (*params)[0], (*params)[1], (*params)[2], t.resolve(end), k.resolve(end)),
            sense.value_or(Sense::Dominate)};
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(end, e.what());
  }
}

std::string serialize_labelled(const LabelledInstance& labelled, Sense sense) {
  std::ostringstream out;
  out << serialize_graph(labelled.graph());
  out << "labelled " << labelled.base() << ' ' << labelled.step() << ' ' << labelled.levels() << '\n';
  // Free sorts before every fixed value, so ties prefer F.
  write_table(out, "t", labelled.labels(), mode_of(labelled.labels(), kFree), label_text);
  write_table(out, "k", labelled.quota(), mode_of(labelled.quota(), Value{0}),
              [](Value x) { return std::to_string(x); });
  out << "sense " << to_string(sense) << '\n';
  return out.str();
}

EliminationOrder parse_order(std::string_view text, std::size_t n, OrderKind kind) {
  std::optional<EliminationOrder> order;
  detail::for_each_line(text, [&](std::size_t lineno, const std::vector<std::string>& tok) {
    if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') return;
    if (tok[0] != "order") throw ParseError(lineno, "expected `order <v_1> ... <v_n>`");
    if (order) throw ParseError(lineno, "second order line");
    EliminationOrder o{{}, kind};
    for (std::size_t i = 1; i < tok.size(); ++i) o.order.push_back(detail::parse_vertex(tok[i], n, lineno));
    try {
      o.require_permutation(n);
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
    order = std::move(o);
  });
  if (!order) throw ParseError(1, "missing order line");
  return *order;
}

std::string serialize_order(const EliminationOrder& order) {
  std::ostringstream out;
  out << "order";
  for (Vertex v : order.order) out << ' ' << v + 1;
  out << '\n';
  return out.str();
}

std::string value_map_header(const ValueMap& map) {
  std::ostringstream out;
  out << "# valuemap scale=" << map.scale << " offset=" << map.offset << " flip=" << (map.flip ? 1 : 0) << '\n';
  return out.str();
}

std::optional<ValueMap> parse_value_map_header(std::string_view text) {
  std::optional<ValueMap> found;
  detail::for_each_line(text, [&](std::size_t lineno, const std::vector<std::string>& tok) {
    if (found || tok.size() != 5 || tok[0] != "#" || tok[1] != "valuemap") return;
    ValueMap map;
    auto field = [&](const std::string& s, const char* key) {
      const std::string prefix = std::string(key) + "=";
      if (s.rfind(prefix, 0) != 0) throw ParseError(lineno, "malformed valuemap field `" + s + "`");
      return detail::parse_int(s.substr(prefix.size()), lineno);
    };
    map.scale = field(tok[2], "scale");
    map.offset = field(tok[3], "offset");
    map.flip = field(tok[4], "flip") != 0;
    found = map;
  });
  return found;
}

}  // namespace gdf
