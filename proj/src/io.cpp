#include "mdimlab/io.hpp"

#include <charconv>
#include <sstream>

namespace mdimlab {

namespace {

constexpr int kBias = 63;

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::string byte_at(std::size_t pos) { return "byte " + std::to_string(pos); }
std::string line_at(std::size_t line) { return "line " + std::to_string(line); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Whitespace-separated integers on one line.
bool read_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{}) return false;
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') return false;
    out.push_back(value);
  }
  return true;
}

Graph build_or_rethrow(int n, std::vector<Edge> edges, const std::string& where) {
  try {
    return Graph::build(n, std::move(edges));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::VertexOutOfRange) parse_error(where, e.what());
    throw;
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  // Upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
  const long long bits = n * (n - 1) / 2;
  std::vector<unsigned char> packed(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (const Edge& e : g.edges()) {
    const long long k = static_cast<long long>(e.v) * (e.v - 1) / 2 + e.u;
    packed[static_cast<std::size_t>(k / 6)] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  for (const unsigned char c : packed) out.push_back(static_cast<char>(c + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(">>graph6<<")) pos = 10;
  auto take = [&](std::size_t at) -> int {
    if (at >= text.size()) parse_error(byte_at(at), "unexpected end of graph6 data");
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) parse_error(byte_at(at), "byte outside graph6 range 63..126");
    return c - kBias;
  };

  long long n = 0;
  if (take(pos) != 63) {
    n = take(pos++);
  } else if (take(pos + 1) != 63) {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | take(pos++);
  } else {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | take(pos++);
  }
  if (n > 1'000'000) parse_error(byte_at(pos), "graph too large");

  const long long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < bytes) parse_error(byte_at(text.size()), "graph6 body too short");
  if (text.size() - pos > bytes) parse_error(byte_at(pos + bytes), "trailing bytes after graph6 body");

  std::vector<Edge> edges;
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = take(pos + static_cast<std::size_t>(k / 6));
      if (chunk & (1 << (5 - k % 6))) edges.push_back({u, v});
    }
  }
  // Padding bits must be zero for a canonical encoding.
  if (bits % 6 != 0 && bytes > 0) {
    const int last = take(pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) parse_error(byte_at(pos + bytes - 1), "nonzero padding bits");
  }
  return build_or_rethrow(static_cast<int>(n), std::move(edges), "graph6");
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph from_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<long long> nums;
  std::size_t li = 0;
  while (li < lines.size() && trim(lines[li]).empty()) ++li;
  if (li == lines.size()) parse_error(line_at(1), "empty input");
  if (!read_ints(trim(lines[li]), nums) || nums.size() != 2) parse_error(line_at(li + 1), "expected \"n m\"");
  const long long n = nums[0];
  const long long m = nums[1];
  if (n < 0 || m < 0 || n > 1'000'000) parse_error(line_at(li + 1), "bad header counts");

  std::vector<Edge> edges;
  for (++li; li < lines.size(); ++li) {
    const auto line = trim(lines[li]);
    if (line.empty()) continue;
    if (!read_ints(line, nums) || nums.size() != 2) parse_error(line_at(li + 1), "expected \"u v\"");
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= n || nums[1] >= n) {
      parse_error(line_at(li + 1), "vertex index out of range 0.." + std::to_string(n - 1));
    }
    edges.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1])});
  }
  if (static_cast<long long>(edges.size()) != m) {
    parse_error(line_at(lines.size()), "header announces " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
  }
  return build_or_rethrow(static_cast<int>(n), std::move(edges), "edge list");
}

namespace {

bool looks_like_edge_list(std::string_view text) {
  for (const auto line : split_lines(text)) {
    const auto t = trim(line);
    if (t.empty()) continue;
    std::vector<long long> nums;
    return read_ints(t, nums) && nums.size() == 2;
  }
  return false;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  if (looks_like_edge_list(text)) return from_edge_list(text);
  return from_graph6(trim(text));
}

std::vector<Graph> parse_graphs(std::string_view text) {
  if (looks_like_edge_list(text)) return {from_edge_list(text)};
  std::vector<Graph> out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParseError) throw;
      parse_error(line_at(i + 1), e.what());
    }
  }
  if (out.empty()) parse_error(line_at(1), "no graphs in input");
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const DerivedGraph& dg) {
  std::ostringstream os;
  os << "graph " << to_string(dg.kind) << " {\n";
  for (Vertex v = 0; v < dg.graph.order(); ++v) {
    const Provenance& p = dg.provenance[v];
    if (p.source == Provenance::Source::Original) {
      os << "  " << v << " [label=\"v" << p.index << "\", shape=circle];\n";
    } else {
      os << "  " << v << " [label=\"e" << p.index << "\", shape=box];\n";
    }
  }
  for (EdgeId j = 0; j < dg.graph.size(); ++j) {
    const Edge& e = dg.graph.edge(j);
    os << "  " << e.u << " -- " << e.v << " [class=\"" << to_string(dg.edge_class[j]) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mdimlab
