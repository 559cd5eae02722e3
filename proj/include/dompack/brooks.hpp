#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "dompack/graph.hpp"

namespace dompack {

/// Proper coloring with colors 0..count-1.
struct BrooksColoring {
  std::vector<int> colors;
  int count = 0;

  VertexSet color_class(int c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(colors.size()); ++v)
      if (colors[v] == c) out.push_back(v);
    return VertexSet(static_cast<int>(colors.size()), std::move(out));
  }
};

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return std::none_of(colors.begin(), colors.end(), [](int c) { return c < 0; });
}

inline bool is_complete(const Graph& g) {
  const long long n = g.order();
  return static_cast<long long>(g.size()) == n * (n - 1) / 2;
}

inline bool is_odd_cycle(const Graph& g) {
  if (g.order() < 3 || g.order() % 2 == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

namespace detail {

inline int count_colors(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Colors vertices in the given sequence with the smallest color unused by colored
// neighbors; entries already >= 0 are kept.
inline void greedy_in_order(const Graph& g, const std::vector<Vertex>& sequence,
                            std::vector<int>& colors) {
  std::vector<int> used(static_cast<std::size_t>(g.order()) + 2, -1);
  for (Vertex v : sequence) {
    if (colors[v] >= 0) continue;
    for (Vertex u : g.neighbors(v))
      if (colors[u] >= 0) used[colors[u]] = v;
    int c = 0;
    while (used[c] == v) ++c;
    colors[v] = c;
  }
}

// Removal order of repeated minimum-degree deletion (ties by smallest id); colored in
// reverse, every vertex sees at most its residual degree of colored neighbors.
inline std::vector<Vertex> smallest_last_sequence(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removal;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    gone[pick] = 1;
    removal.push_back(pick);
    for (Vertex u : g.neighbors(pick))
      if (!gone[u]) --deg[u];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

inline bool connected_without(const Graph& g, std::initializer_list<Vertex> removed) {
  const int n = g.order();
  std::vector<char> skip(static_cast<std::size_t>(n), 0);
  for (Vertex r : removed) skip[r] = 1;
  Vertex start = -1;
  int remaining = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!skip[v]) {
      ++remaining;
      if (start == -1) start = v;
    }
  if (remaining <= 1) return true;
  std::vector<char> seen(skip);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == remaining;
}

// Regular case: v with non-adjacent neighbors u, w such that G - {u, w} stays connected.
struct BrooksTriple {
  Vertex v, u, w;
};

inline std::optional<BrooksTriple> find_brooks_triple(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j]) && connected_without(g, {nb[i], nb[j]}))
          return BrooksTriple{v, nb[i], nb[j]};
  }
  return std::nullopt;
}

inline std::optional<Vertex> find_cut_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!connected_without(g, {v})) return v;
  return std::nullopt;
}

inline std::vector<int> color_regular(const Graph& g, const BrooksTriple& t) {
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  colors[t.u] = colors[t.w] = 0;
  // BFS from v in G - {u, w}; color farthest first so each vertex still has its
  // (uncolored) BFS parent when it is colored.
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist[t.v] = 0;
  std::vector<Vertex> order{t.v};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex x : g.neighbors(order[head]))
      if (dist[x] == -1 && x != t.u && x != t.w) {
        dist[x] = dist[order[head]] + 1;
        order.push_back(x);
      }
  std::reverse(order.begin(), order.end());
  greedy_in_order(g, order, colors);
  return colors;
}

// Regular graph with a cut vertex c: every piece G[C + c] is connected and non-regular
// (c loses its neighbors in other pieces), so smallest-last colors it within the bound;
// pieces are then aligned on the color of c.
inline std::vector<int> color_around_cut(const Graph& g, Vertex cut) {
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  assigned[cut] = 1;
  int cut_color = -1;
  for (Vertex s = 0; s < n; ++s) {
    if (assigned[s]) continue;
    std::vector<Vertex> piece{cut, s};
    assigned[s] = 1;
    for (std::size_t head = 1; head < piece.size(); ++head)
      for (Vertex x : g.neighbors(piece[head]))
        if (!assigned[x]) {
          assigned[x] = 1;
          piece.push_back(x);
        }
    std::sort(piece.begin(), piece.end());
    auto sub = induced_subgraph(g, piece);
    std::vector<int> local(static_cast<std::size_t>(sub.graph.order()), -1);
    greedy_in_order(sub.graph, smallest_last_sequence(sub.graph), local);
    const int c_local = local[sub.to_local[cut]];
    if (cut_color == -1) cut_color = c_local;
    for (Vertex lv = 0; lv < sub.graph.order(); ++lv) {
      int c = local[lv];
      if (c == c_local)
        c = cut_color;
      else if (c == cut_color)
        c = c_local;
      colors[sub.to_parent[lv]] = c;
    }
  }
  if (cut_color == -1) colors[cut] = 0;
  return colors;
}

}  // namespace detail

/// Constructive Brooks coloring of a connected graph: n colors on complete graphs, 3 on
/// odd cycles, otherwise at most max degree.
inline BrooksColoring brooks_color(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("brooks_color needs a connected graph");
  const int n = g.order();
  BrooksColoring out;
  if (n == 0) return out;

  if (is_complete(g)) {
    out.colors.resize(static_cast<std::size_t>(n));
    std::iota(out.colors.begin(), out.colors.end(), 0);
  } else if (is_odd_cycle(g)) {
    out.colors.assign(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    detail::greedy_in_order(g, seq, out.colors);
  } else if (g.min_degree() < g.max_degree() || g.max_degree() <= 2) {
    // non-regular, or a path/even cycle
    out.colors.assign(static_cast<std::size_t>(n), -1);
    detail::greedy_in_order(g, detail::smallest_last_sequence(g), out.colors);
    if (g.max_degree() <= 2 && detail::count_colors(out.colors) > 2) {
      auto lab = bipartition(g);
      for (Vertex v = 0; v < n; ++v) out.colors[v] = lab->side_x.contains(v) ? 0 : 1;
    }
  } else if (auto cut = detail::find_cut_vertex(g)) {
    out.colors = detail::color_around_cut(g, *cut);
  } else {
    auto triple = detail::find_brooks_triple(g);
    if (!triple) throw VerificationError("no Brooks triple in a 2-connected regular graph");
    out.colors = detail::color_regular(g, *triple);
  }
  out.count = detail::count_colors(out.colors);
  if (!is_proper_coloring(g, out.colors)) throw VerificationError("brooks_color produced an improper coloring");
  const bool exceptional = is_complete(g) || is_odd_cycle(g);
  if (!exceptional && out.count > std::max(g.max_degree(), 1))
    throw VerificationError("brooks_color used more than max-degree colors");
  return out;
}

}  // namespace dompack
