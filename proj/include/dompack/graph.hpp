#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dompack {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Distance value for vertices in different components.
inline constexpr int kUnreachable = INT_MAX;

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A constructed certificate failed its independent check. Always a bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(check_order(n))) {}

  // Rejects loops, parallel edges and out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside 0.." + std::to_string(n - 1));
      if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
      auto& nb = g.adjacency_[v];
      std::sort(nb.begin(), nb.end());
      auto dup = std::adjacent_find(nb.begin(), nb.end());
      if (dup != nb.end())
        throw PreconditionError("duplicate edge (" + std::to_string(v) + "," +
                                std::to_string(*dup) + ")");
    }
    g.edge_count_ = edges.size();
    return g;
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    return from_edges(n, std::span<const Edge>(edges));
  }

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : adjacency_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  int min_degree() const {
    if (adjacency_.empty()) return 0;
    int d = INT_MAX;
    for (const auto& nb : adjacency_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
  }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Edges (u, v) with u < v, lexicographic.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool valid_vertex(Vertex v) const { return v >= 0 && v < order(); }

  void check_vertex(Vertex v) const {
    if (!valid_vertex(v))
      throw PreconditionError("vertex id " + std::to_string(v) + " out of range for order " +
                              std::to_string(order()));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  static int check_order(int n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    return n;
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Sorted, duplicate-free set of vertex ids drawn from 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int universe, std::vector<Vertex> members)
      : universe_(universe), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw PreconditionError("vertex set contains a duplicate id");
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= universe_))
      throw PreconditionError("vertex set member outside 0.." + std::to_string(universe_ - 1));
  }

  static VertexSet all(int universe) {
    std::vector<Vertex> m(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) m[i] = i;
    return VertexSet(universe, std::move(m));
  }

  int universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<Vertex> members_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::max(a.universe(), b.universe()), std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(a.universe(), std::move(out));
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Open neighborhood N(S): vertices adjacent to some member of s (members included only
/// when adjacent to another member).
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v)) mark[u] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mark[v]) out.push_back(v);
  return VertexSet(g.order(), std::move(out));
}

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.push_back(v);
  return VertexSet(g.order(), std::move(out));
}

namespace detail {

inline std::vector<int> bfs_from(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v))
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

}  // namespace detail

/// BFS distances from one vertex; kUnreachable marks other components.
inline std::vector<int> distances_from(const Graph& g, Vertex source) {
  Vertex s[] = {source};
  return detail::bfs_from(g, s);
}

inline int distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  return distances_from(g, u)[v];
}

// min over pairs, by multi-source BFS from a.
inline int set_distance(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw PreconditionError("set_distance needs nonempty sets");
  auto dist = detail::bfs_from(g, a.members());
  int best = kUnreachable;
  for (Vertex v : b) {
    g.check_vertex(v);
    best = std::min(best, dist[v]);
  }
  return best;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    auto dist = distances_from(g, s);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v)
      if (dist[v] != kUnreachable) {
        comp[v] = static_cast<int>(out.size());
        members.push_back(v);
      }
    out.push_back(std::move(members));
  }
  return out;
}

/// Packing: pairwise distance >= 3, i.e. pairwise disjoint closed neighborhoods.
inline bool is_packing(const Graph& g, const VertexSet& s) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) {
    g.check_vertex(v);
    if (covered[v]) return false;
    covered[v] = 1;
    for (Vertex u : g.neighbors(v)) {
      if (covered[u]) return false;
      covered[u] = 1;
    }
  }
  return true;
}

inline bool is_dominating(const Graph& g, const VertexSet& s) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) {
    g.check_vertex(v);
    covered[v] = 1;
    for (Vertex u : g.neighbors(v)) covered[u] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (s.contains(u)) return false;
  return true;
}

/// Induced subgraph together with the id maps in both directions.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
  std::vector<int> to_local;      // parent id -> local id, -1 when absent

  VertexSet lift(const VertexSet& local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent.at(static_cast<std::size_t>(v)));
    return VertexSet(static_cast<int>(to_local.size()), std::move(out));
  }
};

inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Subgraph sub;
  sub.to_local.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : keep) {
    g.check_vertex(v);
    if (sub.to_local[v] != -1) throw PreconditionError("induced_subgraph: repeated vertex");
    sub.to_local[v] = static_cast<int>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : sub.to_parent)
    for (Vertex u : g.neighbors(v))
      if (sub.to_local[u] != -1 && v < u) edges.emplace_back(sub.to_local[v], sub.to_local[u]);
  sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

struct BipartiteLabeling {
  VertexSet side_x;
  VertexSet side_y;
};

enum class Side { x, y };

/// Orderings of both sides of a bipartite graph (biconvex inputs carry them).
struct ConvexOrdering {
  std::vector<Vertex> order_x;
  std::vector<Vertex> order_y;

  friend bool operator==(const ConvexOrdering&, const ConvexOrdering&) = default;
};

/// BFS 2-coloring with vertex 0 on side X; nullopt when an odd cycle exists.
inline std::optional<BipartiteLabeling> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Vertex> xs, ys;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? xs : ys).push_back(v);
  return BipartiteLabeling{VertexSet(n, std::move(xs)), VertexSet(n, std::move(ys))};
}

inline bool is_valid_labeling(const Graph& g, const BipartiteLabeling& lab) {
  if (lab.side_x.size() + lab.side_y.size() != static_cast<std::size_t>(g.order())) return false;
  if (set_union(lab.side_x, lab.side_y).size() != static_cast<std::size_t>(g.order()))
    return false;
  for (auto [u, v] : g.edges())
    if (lab.side_x.contains(u) == lab.side_x.contains(v)) return false;
  return true;
}

/// Square of g restricted to one side: members adjacent iff they share a neighbor in g.
struct SquareGraph {
  Graph graph;
  std::vector<Vertex> to_original;
  std::vector<int> to_local;  // original id -> local id, -1 off the side

  VertexSet pull_back(const VertexSet& local) const {
    std::vector<Vertex> out;
    for (Vertex v : local) out.push_back(to_original.at(static_cast<std::size_t>(v)));
    return VertexSet(static_cast<int>(to_local.size()), std::move(out));
  }
};

inline SquareGraph square_restricted(const Graph& g, const VertexSet& side) {
  if (!is_independent(g, side))
    throw PreconditionError("square_restricted: side is not an independent set");
  SquareGraph sq;
  sq.to_local.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : side) {
    g.check_vertex(v);
    sq.to_local[v] = static_cast<int>(sq.to_original.size());
    sq.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  std::vector<int> seen(static_cast<std::size_t>(g.order()), -1);
  for (Vertex x : side) {
    for (Vertex y : g.neighbors(x))
      for (Vertex x2 : g.neighbors(y))
        if (x2 > x && sq.to_local[x2] != -1 && seen[x2] != x) {
          seen[x2] = x;
          edges.emplace_back(sq.to_local[x], sq.to_local[x2]);
        }
  }
  sq.graph = Graph::from_edges(static_cast<int>(sq.to_original.size()), edges);
  return sq;
}

}  // namespace dompack
