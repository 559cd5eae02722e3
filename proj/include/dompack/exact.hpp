#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "dompack/graph.hpp"
#include "dompack/report.hpp"

namespace dompack {

inline constexpr long long kDefaultBudget = 10'000'000;

/// Minimum dominating set. When the node budget runs out, status is inconclusive,
/// value/witness hold the best set found and lower_bound the proven bound.
struct GammaResult {
  int value = 0;
  VertexSet witness;
  long long nodes = 0;
  SolveStatus status = SolveStatus::exact;
  int lower_bound = 0;

  bool exact() const { return status == SolveStatus::exact; }
};

/// Maximum packing; upper_bound is the proven bound when inconclusive.
struct RhoResult {
  int value = 0;
  VertexSet witness;
  long long nodes = 0;
  SolveStatus status = SolveStatus::exact;
  int upper_bound = 0;

  bool exact() const { return status == SolveStatus::exact; }
};

namespace detail {

// Branch and bound over the set-cover formulation: every closed neighborhood must hold a
// chosen vertex. Branches on the undominated vertex with fewest usable dominators.
class DominationSearch {
 public:
  DominationSearch(const Graph& g, long long budget)
      : g_(g), n_(g.order()), budget_(budget),
        dominated_by_(static_cast<std::size_t>(n_), 0),
        forbidden_(static_cast<std::size_t>(n_), 0),
        mark_(static_cast<std::size_t>(n_), 0) {}

  GammaResult run() {
    best_ = greedy();
    root_bound_ = lower_bound();
    search();
    GammaResult r;
    r.value = static_cast<int>(best_.size());
    r.witness = VertexSet(n_, best_);
    r.nodes = nodes_;
    r.status = aborted_ ? SolveStatus::inconclusive : SolveStatus::exact;
    r.lower_bound = aborted_ ? root_bound_ : r.value;
    return r;
  }

 private:
  std::vector<Vertex> greedy() const {
    std::vector<char> covered(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> chosen;
    int left = n_;
    while (left > 0) {
      Vertex pick = -1;
      int gain = -1;
      for (Vertex v = 0; v < n_; ++v) {
        int c = covered[v] ? 0 : 1;
        for (Vertex u : g_.neighbors(v)) c += covered[u] ? 0 : 1;
        if (c > gain) {
          gain = c;
          pick = v;
        }
      }
      chosen.push_back(pick);
      if (!covered[pick]) covered[pick] = 1, --left;
      for (Vertex u : g_.neighbors(pick))
        if (!covered[u]) covered[u] = 1, --left;
    }
    return chosen;
  }

  int usable_dominators(Vertex v) const {
    int c = forbidden_[v] ? 0 : 1;
    for (Vertex u : g_.neighbors(v)) c += forbidden_[u] ? 0 : 1;
    return c;
  }

  // Undominated vertices whose usable dominator sets are pairwise disjoint each need
  // their own chosen vertex.
  int lower_bound() {
    std::vector<std::pair<int, Vertex>> open;
    for (Vertex v = 0; v < n_; ++v)
      if (dominated_by_[v] == 0) open.emplace_back(usable_dominators(v), v);
    std::sort(open.begin(), open.end());
    ++stamp_;
    int count = 0;
    for (auto [_, v] : open) {
      bool clash = (!forbidden_[v] && mark_[v] == stamp_);
      for (Vertex u : g_.neighbors(v))
        if (!forbidden_[u] && mark_[u] == stamp_) clash = true;
      if (clash) continue;
      ++count;
      mark_[v] = stamp_;
      for (Vertex u : g_.neighbors(v)) mark_[u] = stamp_;
    }
    return static_cast<int>(chosen_.size()) + count;
  }

  void choose(Vertex v, int delta) {
    dominated_by_[v] += delta;
    for (Vertex u : g_.neighbors(v)) dominated_by_[u] += delta;
  }

  void search() {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    Vertex branch = -1;
    int fewest = n_ + 2;
    for (Vertex v = 0; v < n_; ++v) {
      if (dominated_by_[v] != 0) continue;
      int c = usable_dominators(v);
      if (c < fewest) {
        fewest = c;
        branch = v;
      }
    }
    if (branch == -1) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (fewest == 0) return;
    if (lower_bound() >= static_cast<int>(best_.size())) return;

    std::vector<Vertex> candidates;
    if (!forbidden_[branch]) candidates.push_back(branch);
    for (Vertex u : g_.neighbors(branch))
      if (!forbidden_[u]) candidates.push_back(u);
    std::sort(candidates.begin(), candidates.end());

    std::vector<Vertex> excluded;
    for (Vertex c : candidates) {
      chosen_.push_back(c);
      choose(c, +1);
      search();
      choose(c, -1);
      chosen_.pop_back();
      if (aborted_) break;
      forbidden_[c] = 1;
      excluded.push_back(c);
    }
    for (Vertex c : excluded) forbidden_[c] = 0;
  }

  const Graph& g_;
  int n_;
  long long budget_;
  long long nodes_ = 0;
  bool aborted_ = false;
  int root_bound_ = 0;
  std::vector<int> dominated_by_;
  std::vector<char> forbidden_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
};

/// Vertices within distance two of each other, as a graph.
inline Graph conflict_graph(const Graph& g) {
  std::vector<Edge> edges;
  std::vector<int> seen(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    seen[v] = v;
    for (Vertex u : g.neighbors(v)) {
      if (seen[u] != v) {
        seen[u] = v;
        if (u > v) edges.emplace_back(v, u);
      }
      for (Vertex w : g.neighbors(u))
        if (seen[w] != v) {
          seen[w] = v;
          if (w > v) edges.emplace_back(v, w);
        }
    }
  }
  return Graph::from_edges(g.order(), edges);
}

// Maximum independent set of the conflict graph. Branches in/out on a maximum-degree
// vertex of the live subgraph; prunes with a greedy clique cover.
class PackingSearch {
 public:
  PackingSearch(const Graph& conflict, long long budget)
      : h_(conflict), n_(conflict.order()), budget_(budget),
        alive_(static_cast<std::size_t>(n_), 1) {}

  RhoResult run() {
    best_ = greedy();
    root_bound_ = static_cast<int>(std::count(alive_.begin(), alive_.end(), 1));
    root_bound_ = std::min(root_bound_, clique_cover_bound());
    search();
    RhoResult r;
    r.value = static_cast<int>(best_.size());
    r.witness = VertexSet(n_, best_);
    r.nodes = nodes_;
    r.status = aborted_ ? SolveStatus::inconclusive : SolveStatus::exact;
    r.upper_bound = aborted_ ? root_bound_ : r.value;
    return r;
  }

 private:
  std::vector<Vertex> greedy() const {
    std::vector<char> live(static_cast<std::size_t>(n_), 1);
    std::vector<Vertex> out;
    while (true) {
      Vertex pick = -1;
      int low = n_ + 1;
      for (Vertex v = 0; v < n_; ++v) {
        if (!live[v]) continue;
        int d = 0;
        for (Vertex u : h_.neighbors(v)) d += live[u];
        if (d < low) {
          low = d;
          pick = v;
        }
      }
      if (pick == -1) break;
      out.push_back(pick);
      live[pick] = 0;
      for (Vertex u : h_.neighbors(pick)) live[u] = 0;
    }
    return out;
  }

  // Each clique holds at most one packing vertex.
  int clique_cover_bound() {
    std::vector<std::vector<Vertex>> cliques;
    for (Vertex v = 0; v < n_; ++v) {
      if (!alive_[v]) continue;
      bool placed = false;
      for (auto& clique : cliques) {
        bool fits = std::all_of(clique.begin(), clique.end(),
                                [&](Vertex w) { return h_.adjacent(v, w); });
        if (fits) {
          clique.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back({v});
    }
    return static_cast<int>(cliques.size());
  }

  void search() {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    Vertex branch = -1;
    int high = -1;
    int live = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (!alive_[v]) continue;
      ++live;
      int d = 0;
      for (Vertex u : h_.neighbors(v)) d += alive_[u];
      if (d > high) {
        high = d;
        branch = v;
      }
    }
    const int current = static_cast<int>(chosen_.size());
    if (branch == -1) {
      if (current > static_cast<int>(best_.size())) best_ = chosen_;
      return;
    }
    if (high == 0) {
      if (current + live > static_cast<int>(best_.size())) {
        best_ = chosen_;
        for (Vertex v = 0; v < n_; ++v)
          if (alive_[v]) best_.push_back(v);
      }
      return;
    }
    if (current + clique_cover_bound() <= static_cast<int>(best_.size())) return;

    // in
    std::vector<Vertex> removed;
    removed.push_back(branch);
    alive_[branch] = 0;
    for (Vertex u : h_.neighbors(branch))
      if (alive_[u]) {
        alive_[u] = 0;
        removed.push_back(u);
      }
    chosen_.push_back(branch);
    search();
    chosen_.pop_back();
    for (Vertex u : removed) alive_[u] = 1;
    if (aborted_) return;

    // out
    alive_[branch] = 0;
    search();
    alive_[branch] = 1;
  }

  const Graph& h_;
  int n_;
  long long budget_;
  long long nodes_ = 0;
  bool aborted_ = false;
  int root_bound_ = 0;
  std::vector<char> alive_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
};

template <typename Result, typename Solve>
Result solve_by_component(const Graph& g, long long budget, Solve solve) {
  Result total;
  std::vector<Vertex> witness;
  bool inconclusive = false;
  for (const auto& comp : components(g)) {
    auto sub = induced_subgraph(g, comp);
    Result part = solve(sub.graph, budget - total.nodes > 0 ? budget - total.nodes : 1);
    total.value += part.value;
    total.nodes += part.nodes;
    if constexpr (std::is_same_v<Result, GammaResult>)
      total.lower_bound += part.lower_bound;
    else
      total.upper_bound += part.upper_bound;
    if (!part.exact()) inconclusive = true;
    for (Vertex v : sub.lift(part.witness)) witness.push_back(v);
  }
  total.witness = VertexSet(g.order(), std::move(witness));
  total.status = inconclusive ? SolveStatus::inconclusive : SolveStatus::exact;
  return total;
}

}  // namespace detail

/// Exact gamma(G) by branch and bound; components are solved separately and summed.
inline GammaResult domination_number(const Graph& g, long long budget = kDefaultBudget) {
  auto r = detail::solve_by_component<GammaResult>(g, budget, [](const Graph& c, long long b) {
    return detail::DominationSearch(c, b).run();
  });
  if (!is_dominating(g, r.witness) || static_cast<int>(r.witness.size()) != r.value)
    throw VerificationError("domination solver returned an invalid witness");
  return r;
}

/// Exact rho(G): maximum independent set of the distance-two conflict graph.
inline RhoResult packing_number(const Graph& g, long long budget = kDefaultBudget) {
  auto r = detail::solve_by_component<RhoResult>(g, budget, [](const Graph& c, long long b) {
    return detail::PackingSearch(detail::conflict_graph(c), b).run();
  });
  if (!is_packing(g, r.witness) || static_cast<int>(r.witness.size()) != r.value)
    throw VerificationError("packing solver returned an invalid witness");
  return r;
}

inline constexpr int kBruteForceCap = 24;

namespace detail {

inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
  if (g.order() > kBruteForceCap)
    throw PreconditionError("brute-force oracle limited to n <= " + std::to_string(kBruteForceCap));
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    masks[v] = std::uint32_t{1} << v;
    for (Vertex u : g.neighbors(v)) masks[v] |= std::uint32_t{1} << u;
  }
  return masks;
}

// Calls visit(mask) for every k-subset of n in increasing mask order until it returns true.
template <typename Visit>
bool for_each_subset(int n, int k, Visit visit) {
  if (k == 0) return visit(std::uint32_t{0});
  if (k > n) return false;
  std::uint32_t mask = (std::uint32_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    if (visit(mask)) return true;
    std::uint32_t c = mask & (~mask + 1);
    std::uint32_t r = mask + c;
    if (r == 0) break;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return false;
}

}  // namespace detail

/// Exhaustive gamma by increasing cardinality; n <= 24.
inline int brute_gamma(const Graph& g) {
  const auto masks = detail::closed_masks(g);
  const int n = g.order();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (int k = 0; k <= n; ++k) {
    bool found = detail::for_each_subset(n, k, [&](std::uint32_t s) {
      std::uint32_t covered = 0;
      for (std::uint32_t t = s; t; t &= t - 1) covered |= masks[std::countr_zero(t)];
      return covered == full;
    });
    if (found) return k;
  }
  return n;
}

/// Exhaustive rho by decreasing cardinality; n <= 24.
inline int brute_rho(const Graph& g) {
  const auto masks = detail::closed_masks(g);
  const int n = g.order();
  if (n == 0) return 0;
  // k disjoint closed neighborhoods of size >= delta+1 fit in n vertices
  const int cap = n / (g.min_degree() + 1);
  for (int k = cap; k >= 1; --k) {
    bool found = detail::for_each_subset(n, k, [&](std::uint32_t s) {
      std::uint32_t covered = 0;
      for (std::uint32_t t = s; t; t &= t - 1) {
        auto m = masks[std::countr_zero(t)];
        if (covered & m) return false;
        covered |= m;
      }
      return true;
    });
    if (found) return k;
  }
  return 0;
}

}  // namespace dompack
