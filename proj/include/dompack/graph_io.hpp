#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dompack/graph.hpp"

namespace dompack {

class FormatError : public Error {
 public:
  using Error::Error;
};

// graph6 limits itself to 36-bit orders; this library caps encoding at 2^18.
inline constexpr int kMaxEncodeOrder = 1 << 18;

namespace detail {

inline std::string_view trim_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
    line.remove_suffix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return line;
}

inline void check_printable(std::string_view body) {
  for (char c : body) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw FormatError("byte " + std::to_string(b) + " outside the range 63..126");
  }
}

// Parses the size field N(n); returns n and advances pos.
inline std::int64_t parse_order(std::string_view body, std::size_t& pos) {
  auto at = [&](std::size_t i) -> std::int64_t {
    if (i >= body.size()) throw FormatError("truncated size field");
    return static_cast<unsigned char>(body[i]) - 63;
  };
  if (at(pos) < 63) return at(pos++);
  if (at(pos + 1) < 63) {
    std::int64_t n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | at(pos + i);
    pos += 4;
    return n;
  }
  std::int64_t n = 0;
  for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | at(pos + i);
  pos += 8;
  return n;
}

inline void append_order(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

/// Decodes one graph6 line (an optional ">>graph6<<" header is accepted).
inline Graph decode_graph6(std::string_view line) {
  line = detail::trim_line(line);
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  if (line.empty()) throw FormatError("empty graph6 line");
  detail::check_printable(line);
  std::size_t pos = 0;
  const std::int64_t n = detail::parse_order(line, pos);
  if (n > kMaxEncodeOrder) throw FormatError("graph6 order " + std::to_string(n) + " exceeds limit");
  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t bytes = (bits + 5) / 6;
  if (static_cast<std::int64_t>(line.size() - pos) != bytes)
    throw FormatError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                      std::to_string(bytes));
  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      auto byte = static_cast<unsigned char>(line[pos + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  for (; k < bytes * 6; ++k) {
    auto byte = static_cast<unsigned char>(line[pos + k / 6]) - 63;
    if ((byte >> (5 - k % 6)) & 1) throw FormatError("nonzero padding bits in graph6 line");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string encode_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  if (n > kMaxEncodeOrder) throw PreconditionError("graph order exceeds the graph6 encoding limit");
  std::string out;
  detail::append_order(out, n);
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Decodes one sparse6 line (leading ':'; optional ">>sparse6<<" header). Multigraph
/// features (loops, repeated edges) are rejected since Graph is simple.
inline Graph decode_sparse6(std::string_view line) {
  line = detail::trim_line(line);
  constexpr std::string_view header = ">>sparse6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  if (line.empty() || line.front() != ':') throw FormatError("sparse6 line must start with ':'");
  line.remove_prefix(1);
  detail::check_printable(line);
  std::size_t pos = 0;
  const std::int64_t n = detail::parse_order(line, pos);
  if (n > kMaxEncodeOrder) throw FormatError("sparse6 order exceeds limit");
  int k = 1;
  while ((std::int64_t{1} << k) < n) ++k;

  std::size_t byte_index = pos;
  int bits_left = 0;
  int current = 0;
  auto next_bit = [&]() -> std::optional<int> {
    if (bits_left == 0) {
      if (byte_index >= line.size()) return std::nullopt;
      current = static_cast<unsigned char>(line[byte_index++]) - 63;
      bits_left = 6;
    }
    --bits_left;
    return (current >> bits_left) & 1;
  };

  std::vector<Edge> edges;
  std::int64_t v = 0;
  while (true) {
    auto b = next_bit();
    if (!b) break;
    std::int64_t x = 0;
    bool complete = true;
    for (int i = 0; i < k; ++i) {
      auto bit = next_bit();
      if (!bit) {
        complete = false;
        break;
      }
      x = (x << 1) | *bit;
    }
    if (!complete) break;
    if (*b == 1) ++v;
    if (x >= n || v >= n) break;
    if (x > v)
      v = x;
    else
      edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

// Dispatches on the leading ':' of sparse6.
inline Graph decode_graph_line(std::string_view line) {
  auto t = detail::trim_line(line);
  if (t.starts_with(":") || t.starts_with(">>sparse6<<")) return decode_sparse6(t);
  return decode_graph6(t);
}

// One graph per nonempty line; lines starting with '#' (never valid graph6) are skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = detail::trim_line(line);
    if (t.empty() || t.starts_with("#")) continue;
    out.push_back(decode_graph_line(line));
  }
  return out;
}

struct EdgeListGraph {
  Graph graph;
  std::optional<ConvexOrdering> ordering;
};

namespace detail {

inline std::vector<long long> parse_ints(std::string_view text, int line_no) {
  std::vector<long long> out;
  std::istringstream ss{std::string(text)};
  long long value;
  while (ss >> value) out.push_back(value);
  if (!ss.eof()) throw FormatError("line " + std::to_string(line_no) + ": expected integers");
  return out;
}

}  // namespace detail

/// Reads every edge-list block from text. A block is a header "n m", optional
/// "orderX ..." / "orderY ..." lines, then m lines "u v". Lines starting with '#' are
/// comments.
inline std::vector<EdgeListGraph> read_edge_lists(std::string_view text) {
  std::vector<EdgeListGraph> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;

  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::optional<std::vector<Vertex>> order_x, order_y;

  auto finish = [&]() {
    if (!header) return;
    const auto [n, m] = *header;
    if (static_cast<long long>(edges.size()) != m)
      throw FormatError("edge list declares " + std::to_string(m) + " edges but has " +
                        std::to_string(edges.size()));
    EdgeListGraph block;
    try {
      block.graph = Graph::from_edges(static_cast<int>(n), edges);
    } catch (const PreconditionError& e) {
      throw FormatError(e.what());
    }
    if (order_x || order_y) {
      if (!order_x || !order_y) throw FormatError("edge list gives only one of orderX/orderY");
      block.ordering = ConvexOrdering{*order_x, *order_y};
    }
    out.push_back(std::move(block));
    header.reset();
    edges.clear();
    order_x.reset();
    order_y.reset();
  };

  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim_line(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("orderX") || line.starts_with("orderY")) {
      if (!header) throw FormatError("line " + std::to_string(line_no) + ": ordering before header");
      auto values = detail::parse_ints(line.substr(6), line_no);
      std::vector<Vertex> order(values.begin(), values.end());
      (line[5] == 'X' ? order_x : order_y) = std::move(order);
      continue;
    }
    auto values = detail::parse_ints(line, line_no);
    if (values.size() != 2)
      throw FormatError("line " + std::to_string(line_no) + ": expected two integers");
    if (!header || static_cast<long long>(edges.size()) == header->second) {
      finish();
      if (values[0] < 0 || values[1] < 0) throw FormatError("negative header value");
      header = std::make_pair(values[0], values[1]);
      continue;
    }
    const long long n = header->first;
    if (values[0] == values[1])
      throw FormatError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(values[0]));
    if (values[0] < 0 || values[1] < 0 || values[0] >= n || values[1] >= n)
      throw FormatError("line " + std::to_string(line_no) + ": vertex id out of range");
    edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
  }
  finish();
  return out;
}

inline Graph read_edge_list(std::string_view text) {
  auto blocks = read_edge_lists(text);
  if (blocks.size() != 1)
    throw FormatError("expected exactly one edge-list graph, found " + std::to_string(blocks.size()));
  return std::move(blocks.front().graph);
}

inline std::string write_edge_list(const Graph& g, const ConvexOrdering* ordering = nullptr) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  if (ordering) {
    out << "orderX";
    for (Vertex v : ordering->order_x) out << ' ' << v;
    out << "\norderY";
    for (Vertex v : ordering->order_y) out << ' ' << v;
    out << '\n';
  }
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace dompack
