#pragma once

#include <string>
#include <vector>

#include "dompack/bounds.hpp"
#include "dompack/brooks.hpp"
#include "dompack/exact.hpp"
#include "dompack/graph.hpp"

namespace dompack {

inline bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

inline bool is_bicubic(const Graph& g) {
  return g.order() > 0 && is_cubic(g) && is_connected(g) && bipartition(g).has_value();
}

namespace detail {

inline void require_bicubic(const Graph& g, const char* op) {
  if (!is_cubic(g)) throw PreconditionError(std::string(op) + ": graph is not cubic");
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": graph is not connected");
  if (!bipartition(g)) throw PreconditionError(std::string(op) + ": graph is not bipartite");
}

inline const VertexSet& pick_side(const BipartiteLabeling& lab, Side side) {
  return side == Side::x ? lab.side_x : lab.side_y;
}

// Vertices of `pool` taken in ascending id whenever they keep `start` a packing.
inline VertexSet extend_packing(const Graph& g, const VertexSet& start, const VertexSet& pool) {
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  auto block = [&](Vertex v) {
    // anything within distance two of v can no longer join
    blocked[v] = 1;
    for (Vertex u : g.neighbors(v)) {
      blocked[u] = 1;
      for (Vertex w : g.neighbors(u)) blocked[w] = 1;
    }
  };
  std::vector<Vertex> members(start.begin(), start.end());
  for (Vertex v : start) block(v);
  for (Vertex v : pool)
    if (!blocked[v]) {
      members.push_back(v);
      block(v);
    }
  return VertexSet(g.order(), std::move(members));
}

}  // namespace detail

/// Packing inside one side of a connected bicubic graph (n >= 16): the largest color
/// class of a Brooks coloring of the side's restricted square.
inline VertexSet side_packing(const Graph& g, const BipartiteLabeling& labeling, Side side) {
  detail::require_bicubic(g, "side_packing");
  if (!is_valid_labeling(g, labeling)) throw PreconditionError("side_packing: labeling is not a bipartition");
  if (g.order() < 16) throw PreconditionError("side_packing: needs n >= 16");
  const VertexSet& part = detail::pick_side(labeling, side);
  auto square = square_restricted(g, part);
  if (!is_connected(square.graph)) throw VerificationError("side square is disconnected");
  if (square.graph.max_degree() > 6) throw VerificationError("side square has degree above 6");
  if (is_complete(square.graph)) throw VerificationError("side square is complete");

  auto coloring = brooks_color(square.graph);
  int best = 0;
  std::size_t best_size = 0;
  for (int c = 0; c < coloring.count; ++c) {
    auto cls = coloring.color_class(c);
    if (cls.size() > best_size) {
      best_size = cls.size();
      best = c;
    }
  }
  VertexSet out = square.pull_back(coloring.color_class(best));
  if (!is_packing(g, out) || !is_subset(out, part) || 6 * out.size() < part.size())
    throw VerificationError("side_packing certificate failed");
  return out;
}

/// Layers around a side-maximal packing P in X: Q = N(P), R = N(Q) \ P, S = N(R) \ Q,
/// T a maximal packing inside S (ascending id), W = N(T).
struct LayerDecomposition {
  VertexSet p, q, r, s, t, w;
  VertexSet side_x;  // the side containing P
  VertexSet side_y;
};

inline LayerDecomposition layer_decompose(const Graph& g, const BipartiteLabeling& labeling,
                                          const VertexSet& p) {
  detail::require_bicubic(g, "layer_decompose");
  if (!is_valid_labeling(g, labeling)) throw PreconditionError("layer_decompose: labeling is not a bipartition");
  if (p.empty()) throw PreconditionError("layer_decompose: empty packing");
  LayerDecomposition d;
  if (is_subset(p, labeling.side_x)) {
    d.side_x = labeling.side_x;
    d.side_y = labeling.side_y;
  } else if (is_subset(p, labeling.side_y)) {
    d.side_x = labeling.side_y;
    d.side_y = labeling.side_x;
  } else {
    throw PreconditionError("layer_decompose: packing spans both sides");
  }
  if (!is_packing(g, p)) throw PreconditionError("layer_decompose: input is not a packing");
  auto maximal = detail::extend_packing(g, p, d.side_x);
  if (maximal.size() != p.size()) {
    auto extra = set_difference(maximal, p);
    throw PreconditionError("layer_decompose: packing is not maximal in its side; vertex " +
                            std::to_string(extra[0]) + " can be added");
  }

  d.p = p;
  d.q = open_neighborhood(g, d.p);
  d.r = set_difference(open_neighborhood(g, d.q), d.p);
  d.s = set_difference(open_neighborhood(g, d.r), d.q);
  d.t = detail::extend_packing(g, VertexSet(g.order(), {}), d.s);
  d.w = open_neighborhood(g, d.t);

  auto fail = [](const char* what) { throw VerificationError(std::string("layer invariant: ") + what); };
  if (set_union(d.p, d.r) != d.side_x) fail("X = P u R");
  if (set_union(d.q, d.s) != d.side_y) fail("Y = Q u S");
  if (d.q.size() != 3 * d.p.size()) fail("|Q| = 3|P|");
  if (!is_subset(d.w, d.r)) fail("W within R");
  if (d.w.size() != 3 * d.t.size()) fail("|W| = 3|T|");
  for (Vertex v : set_difference(d.s, d.t)) {
    bool hit = false;
    for (Vertex u : g.neighbors(v)) hit = hit || d.w.contains(u);
    if (!hit) fail("every vertex of S \\ T has a neighbor in W");
  }
  if (d.s.size() > 4 * d.t.size()) fail("|S| <= 4|T|");
  return d;
}

/// P u T, verified as a packing of g.
inline VertexSet combined_packing(const Graph& g, const LayerDecomposition& d) {
  auto out = set_union(d.p, d.t);
  if (!is_packing(g, out)) throw VerificationError("P u T is not a packing");
  return out;
}

/// Side packing grown to an inclusion-maximal packing of that side.
inline VertexSet maximal_side_packing(const Graph& g, const VertexSet& start, const VertexSet& side) {
  return detail::extend_packing(g, start, side);
}

/// Bound records for a connected bicubic graph: 5n/14 domination bound (n >= 9),
/// 7n/48 packing bound (n >= 16), 120/49 ratio, the 2rho+1 conjecture, and the
/// 2rho check for n <= 14.
inline std::vector<ScanRecord> check_bicubic_bounds(const Graph& g, const std::string& id = "",
                                                   long long budget = kDefaultBudget) {
  detail::require_bicubic(g, "check_bicubic_bounds");
  auto facts = solve_facts(g, "bicubic", id, budget);
  std::vector<ScanRecord> out;
  for (const char* name : {"bicubic-gamma-5n-14", "bicubic-rho-7n-48", "bicubic-ratio-120-49", "subcubic-2rho-plus-1", "bicubic-small"}) {
    if (auto rec = evaluate_bound(find_bound(name), facts, false)) out.push_back(*rec);
  }
  return out;
}

}  // namespace dompack
