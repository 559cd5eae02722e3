#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dompack/graph.hpp"

namespace dompack {

using Triangle = std::array<Vertex, 3>;  // sorted ascending

/// A maximal outerplanar graph with its Hamiltonian boundary and its n-2 triangles.
struct Triangulation {
  Graph graph;
  std::vector<Vertex> boundary;
  std::vector<Triangle> triangles;

  int triangle_count() const { return static_cast<int>(triangles.size()); }
};

/// Recognition outcome: a triangulation, or the reason the graph is not maximal
/// outerplanar.
struct MopRecognition {
  std::optional<Triangulation> triangulation;
  std::string rejection;

  explicit operator bool() const { return triangulation.has_value(); }
};

namespace detail {

inline bool neighborhood_is_path(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  auto sub = induced_subgraph(g, nb);
  const auto& h = sub.graph;
  if (h.order() == 0) return false;
  if (h.size() != static_cast<std::size_t>(h.order() - 1) || !is_connected(h)) return false;
  return h.max_degree() <= 2;
}

inline Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

inline bool triangle_has(const Triangle& t, Vertex v) {
  return t[0] == v || t[1] == v || t[2] == v;
}

}  // namespace detail

/// Ear-clipping recognition: repeatedly removes the smallest-id degree-2 vertex whose two
/// neighbors are adjacent. Accepts exactly the 2-trees whose edges lie in at most two
/// triangles, i.e. the maximal outerplanar graphs.
inline MopRecognition recognize_mop(const Graph& g) {
  MopRecognition out;
  auto reject = [&](std::string why) {
    out.rejection = std::move(why);
    return out;
  };
  const int n = g.order();
  if (n < 3) return reject("fewer than 3 vertices");
  if (!is_connected(g)) return reject("graph is disconnected");
  if (g.size() != static_cast<std::size_t>(2 * n - 3))
    return reject("graph has " + std::to_string(g.size()) + " edges; a maximal outerplanar graph on " +
                  std::to_string(n) + " vertices has " + std::to_string(2 * n - 3));

  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<Vertex> low;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 2) low.insert(v);
  }
  auto live_neighbors = [&](Vertex v) {
    std::vector<Vertex> out_nb;
    for (Vertex u : g.neighbors(v))
      if (alive[u]) out_nb.push_back(u);
    return out_nb;
  };

  std::vector<Triangle> triangles;
  int remaining = n;
  while (remaining > 3) {
    Vertex ear = -1;
    std::vector<Vertex> ends;
    for (Vertex v : low) {
      auto nb = live_neighbors(v);
      if (nb.size() == 2 && g.adjacent(nb[0], nb[1])) {
        ear = v;
        ends = nb;
        break;
      }
    }
    if (ear == -1) return reject("no vertex of degree 2 with adjacent neighbors (missing chord)");
    triangles.push_back(detail::make_triangle(ear, ends[0], ends[1]));
    alive[ear] = 0;
    low.erase(ear);
    --remaining;
    for (Vertex u : ends) {
      --deg[u];
      if (deg[u] == 2)
        low.insert(u);
      else
        low.erase(u);
      if (deg[u] < 2) return reject("vertex " + std::to_string(u) + " loses its triangles");
    }
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) last.push_back(v);
  if (!g.adjacent(last[0], last[1]) || !g.adjacent(last[0], last[2]) || !g.adjacent(last[1], last[2]))
    return reject("final three vertices do not form a triangle");
  triangles.push_back(detail::make_triangle(last[0], last[1], last[2]));

  std::map<Edge, int> edge_use;
  for (const auto& t : triangles)
    for (auto e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) ++edge_use[e];
  std::vector<std::vector<Vertex>> outer(static_cast<std::size_t>(n));
  for (auto [e, uses] : edge_use) {
    if (uses > 2) return reject("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                " lies in more than two triangles");
    if (uses == 1) {
      outer[e.first].push_back(e.second);
      outer[e.second].push_back(e.first);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (outer[v].size() != 2) return reject("boundary is not a Hamiltonian cycle");
  std::vector<Vertex> boundary{0};
  Vertex prev = 0, cur = std::min(outer[0][0], outer[0][1]);
  while (cur != 0) {
    boundary.push_back(cur);
    Vertex next = outer[cur][0] == prev ? outer[cur][1] : outer[cur][0];
    prev = cur;
    cur = next;
    if (static_cast<int>(boundary.size()) > n) break;
  }
  if (static_cast<int>(boundary.size()) != n) return reject("boundary is not a Hamiltonian cycle");

  for (Vertex v = 0; v < n; ++v)
    if (!detail::neighborhood_is_path(g, v))
      throw VerificationError("neighborhood of vertex " + std::to_string(v) + " is not a path");

  std::sort(triangles.begin(), triangles.end());
  out.triangulation = Triangulation{g, std::move(boundary), std::move(triangles)};
  return out;
}

inline Triangulation require_mop(const Graph& g) {
  auto rec = recognize_mop(g);
  if (!rec) throw PreconditionError("not maximal outerplanar: " + rec.rejection);
  return std::move(*rec.triangulation);
}

/// Triangles joined when they share an edge; a tree on n-2 nodes.
struct DualTree {
  Graph tree;
  std::map<Edge, Edge> shared_edge;  // (node, node) with first < second -> graph edge
};

/// Parent/height view of a dual tree hanging from `root`. Height counts edges down to
/// the deepest leaf of the subtree.
struct RootedDual {
  int root = 0;
  std::vector<int> parent;  // -1 at the root
  std::vector<int> depth;
  std::vector<int> height;
  std::vector<std::vector<int>> children;
  std::vector<int> bfs_order;
};

/// Triangles joined when they share at least one vertex.
struct CliqueGraph {
  Graph graph;
};

inline DualTree build_dual(const Triangulation& t) {
  std::map<Edge, std::vector<int>> by_edge;
  for (int i = 0; i < t.triangle_count(); ++i) {
    const auto& tri = t.triangles[i];
    for (auto e : {Edge{tri[0], tri[1]}, Edge{tri[0], tri[2]}, Edge{tri[1], tri[2]}}) by_edge[e].push_back(i);
  }
  DualTree d;
  std::vector<Edge> edges;
  for (const auto& [e, tris] : by_edge)
    if (tris.size() == 2) {
      Edge node_edge{std::min(tris[0], tris[1]), std::max(tris[0], tris[1])};
      edges.push_back(node_edge);
      d.shared_edge[node_edge] = e;
    }
  d.tree = Graph::from_edges(t.triangle_count(), edges);
  if (d.tree.size() + 1 != static_cast<std::size_t>(t.triangle_count()) || !is_connected(d.tree))
    throw VerificationError("dual graph is not a tree");
  return d;
}

inline RootedDual root_dual(const DualTree& d, int root) {
  const int nt = d.tree.order();
  d.tree.check_vertex(root);
  RootedDual r;
  r.root = root;
  r.parent.assign(static_cast<std::size_t>(nt), -1);
  r.depth.assign(static_cast<std::size_t>(nt), -1);
  r.height.assign(static_cast<std::size_t>(nt), 0);
  r.children.assign(static_cast<std::size_t>(nt), {});
  r.depth[root] = 0;
  r.bfs_order.push_back(root);
  for (std::size_t head = 0; head < r.bfs_order.size(); ++head) {
    int u = r.bfs_order[head];
    for (Vertex w : d.tree.neighbors(u))
      if (r.depth[w] == -1) {
        r.depth[w] = r.depth[u] + 1;
        r.parent[w] = u;
        r.children[u].push_back(w);
        r.bfs_order.push_back(w);
      }
  }
  for (auto it = r.bfs_order.rbegin(); it != r.bfs_order.rend(); ++it)
    if (r.parent[*it] != -1) r.height[r.parent[*it]] = std::max(r.height[r.parent[*it]], r.height[*it] + 1);
  return r;
}

inline CliqueGraph build_clique_graph(const Triangulation& t) {
  std::vector<std::vector<int>> by_vertex(static_cast<std::size_t>(t.graph.order()));
  for (int i = 0; i < t.triangle_count(); ++i)
    for (Vertex v : t.triangles[i]) by_vertex[v].push_back(i);
  std::set<Edge> edges;
  for (const auto& tris : by_vertex)
    for (std::size_t a = 0; a < tris.size(); ++a)
      for (std::size_t b = a + 1; b < tris.size(); ++b) edges.emplace(tris[a], tris[b]);
  return CliqueGraph{Graph::from_edges(t.triangle_count(), std::vector<Edge>(edges.begin(), edges.end()))};
}

/// Colors 1..4 such that every two triangles sharing an edge see all four colors.
struct FourColoring {
  std::vector<int> colors;
};

inline bool verify_four_coloring(const Triangulation& t, const DualTree& d, const FourColoring& c) {
  const auto& g = t.graph;
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (int col : c.colors)
    if (col < 1 || col > 4) return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  for (auto [nodes, _] : d.shared_edge) {
    std::set<int> seen;
    for (Vertex v : t.triangles[nodes.first]) seen.insert(c.colors[v]);
    for (Vertex v : t.triangles[nodes.second]) seen.insert(c.colors[v]);
    if (seen.size() != 4) return false;
  }
  return true;
}

/// Colors the root triangle 1,2,3, then walks the dual tree: the apex of each child
/// triangle takes the one color missing from the parent triangle.
inline FourColoring tokunaga_color(const Triangulation& t, int root = 0) {
  auto dual = build_dual(t);
  auto rooted = root_dual(dual, root);
  FourColoring c;
  c.colors.assign(static_cast<std::size_t>(t.graph.order()), 0);
  const auto& top = t.triangles[root];
  for (int i = 0; i < 3; ++i) c.colors[top[i]] = i + 1;
  for (int node : rooted.bfs_order) {
    if (node == root) continue;
    const auto& tri = t.triangles[node];
    const auto& par = t.triangles[rooted.parent[node]];
    int used = 0;
    for (Vertex v : par) used |= 1 << c.colors[v];
    Vertex apex = -1;
    for (Vertex v : tri)
      if (!detail::triangle_has(par, v)) apex = v;
    if (c.colors[apex] != 0) throw VerificationError("apex colored twice during dual walk");
    for (int col = 1; col <= 4; ++col)
      if (!(used & (1 << col))) c.colors[apex] = col;
  }
  if (!verify_four_coloring(t, dual, c)) throw VerificationError("four-coloring check failed");
  return c;
}

inline VertexSet triangle_union(const Triangulation& t, const VertexSet& nodes) {
  std::set<Vertex> vs;
  for (int node : nodes)
    for (Vertex v : t.triangles.at(static_cast<std::size_t>(node))) vs.insert(v);
  return VertexSet(t.graph.order(), std::vector<Vertex>(vs.begin(), vs.end()));
}

/// X = all vertices of the chosen triangles; dominates g whenever nodeset dominates the
/// clique graph.
inline VertexSet project_dominating(const Triangulation& t, const CliqueGraph& cg, const VertexSet& nodeset) {
  if (!is_dominating(cg.graph, nodeset))
    throw PreconditionError("project_dominating: node set does not dominate the clique graph");
  auto x = triangle_union(t, nodeset);
  if (!is_dominating(t.graph, x) || x.size() > 3 * nodeset.size())
    throw VerificationError("projected set fails its check");
  return x;
}

/// The four candidates C_ijk + U_ijk (colors 123, 124, 134, 234) and the smallest one.
struct AveragedDomination {
  std::array<VertexSet, 4> candidates;
  int chosen = 0;
  int low_degree_count = 0;  // t: vertices of degree <= 3

  const VertexSet& best() const { return candidates[chosen]; }
};

inline AveragedDomination averaged_dominating(const Triangulation& t, const VertexSet& x,
                                              const FourColoring& coloring) {
  const auto& g = t.graph;
  const int n = g.order();
  if (static_cast<int>(coloring.colors.size()) != n || x.universe() != n || !is_dominating(g, x))
    throw PreconditionError("averaged_dominating: inconsistent inputs");
  AveragedDomination out;
  for (Vertex v = 0; v < n; ++v) out.low_degree_count += g.degree(v) <= 3 ? 1 : 0;

  const std::array<int, 4> dropped{4, 3, 2, 1};  // 123, 124, 134, 234
  for (int i = 0; i < 4; ++i) {
    std::vector<Vertex> c;
    for (Vertex v : x)
      if (coloring.colors[v] != dropped[i]) c.push_back(v);
    VertexSet base(n, c);
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (Vertex v : base) {
      covered[v] = 1;
      for (Vertex u : g.neighbors(v)) covered[u] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
      if (!covered[v]) {
        if (g.degree(v) > 3)
          throw VerificationError("color-restricted set misses a vertex of degree >= 4");
        c.push_back(v);
      }
    out.candidates[i] = VertexSet(n, std::move(c));
    if (!is_dominating(g, out.candidates[i])) throw VerificationError("averaged candidate does not dominate");
    if (out.candidates[i].size() < out.candidates[out.chosen].size()) out.chosen = i;
  }
  if (4 * out.best().size() > 3 * x.size() + static_cast<std::size_t>(out.low_degree_count))
    throw VerificationError("averaged set exceeds (3|X| + t) / 4");
  return out;
}

/// Lifts a clique-graph packing Z to a packing of g of the same size, assembling
/// Y(u) = {c(u)} + the lifts of u's nearest Z-descendants in the dual tree rooted at
/// the smallest node of Z.
inline VertexSet lift_packing(const Triangulation& t, const DualTree& dual, const CliqueGraph& cg,
                              const VertexSet& z) {
  if (z.empty()) throw PreconditionError("lift_packing: empty node set");
  if (!is_packing(cg.graph, z)) throw PreconditionError("lift_packing: Z is not a clique-graph packing");
  const int nt = t.triangle_count();
  const int root = z[0];
  auto rooted = root_dual(dual, root);

  // nearest strict Z-descendants
  std::vector<std::vector<int>> nearest(static_cast<std::size_t>(nt));
  for (int u : z) {
    std::vector<int> stack(rooted.children[u].begin(), rooted.children[u].end());
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      if (z.contains(w)) {
        nearest[u].push_back(w);
        continue;
      }
      for (int c : rooted.children[w]) stack.push_back(c);
    }
    std::sort(nearest[u].begin(), nearest[u].end());
  }

  auto boundary = [&](int node) {
    std::vector<Vertex> shared;
    for (Vertex v : t.triangles[node])
      if (detail::triangle_has(t.triangles[rooted.parent[node]], v)) shared.push_back(v);
    return shared;
  };

  std::vector<Vertex> pick(static_cast<std::size_t>(nt), -1);
  for (int u : z) {
    if (u == root) {
      std::set<Vertex> excluded;
      for (int q : nearest[u])
        for (Vertex v : boundary(q)) excluded.insert(v);
      for (Vertex v : t.triangles[u])
        if (!excluded.count(v)) {
          pick[u] = v;
          break;
        }
      if (pick[u] == -1) throw VerificationError("root triangle has no free vertex");
    } else {
      for (Vertex v : t.triangles[u])
        if (!detail::triangle_has(t.triangles[rooted.parent[u]], v)) pick[u] = v;
    }
  }

  // deepest first, so every Y(q) exists before its Z-ancestor needs it
  std::vector<std::vector<Vertex>> lifted(static_cast<std::size_t>(nt));
  for (auto it = rooted.bfs_order.rbegin(); it != rooted.bfs_order.rend(); ++it) {
    int u = *it;
    if (!z.contains(u)) continue;
    auto& y = lifted[u];
    y.push_back(pick[u]);
    for (int q : nearest[u]) y.insert(y.end(), lifted[q].begin(), lifted[q].end());
    VertexSet ys(t.graph.order(), y);
    if (!is_packing(t.graph, ys)) throw VerificationError("lifted set is not a packing");
    if (u != root)
      for (Vertex v : boundary(u))
        if (ys.contains(v)) throw VerificationError("lifted set meets the parent boundary");
  }
  VertexSet out(t.graph.order(), lifted[root]);
  if (out.size() != z.size() || !is_packing(t.graph, out))
    throw VerificationError("lift_packing certificate failed");
  return out;
}

}  // namespace dompack
