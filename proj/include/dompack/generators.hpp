#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dompack/biconvex.hpp"
#include "dompack/graph.hpp"
#include "dompack/outerplanar.hpp"

namespace dompack {

using Seed = std::uint64_t;

/// Independent stream for (seed, index): sample i of a corpus never depends on sample i-1.
inline std::mt19937_64 make_rng(Seed seed, std::uint64_t index = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

namespace detail {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph relabel(int n, const std::vector<Edge>& edges, const std::vector<Vertex>& perm) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.push_back({perm[u], perm[v]});
  return Graph::from_edges(n, out);
}

inline double log_catalan(int m) {
  return std::lgamma(2.0 * m + 1) - std::lgamma(m + 2.0) - std::lgamma(m + 1.0);
}

}  // namespace detail

struct BiconvexInstance {
  Graph graph;
  ConvexOrdering ordering;
};

/// G'_k: k copies of K_{2,2} on x_{2i-1}, x_{2i}, y_{2i-1}, y_{2i}, chained by x_{2i} y_{2i+1}.
/// Vertex ids: x_j = j - 1, y_j = 2k + j - 1.
inline BiconvexInstance gen_tight_family(int k) {
  if (k < 1) throw PreconditionError("gen_tight_family: k must be at least 1");
  const int half = 2 * k;
  auto x = [](int j) { return j - 1; };
  auto y = [half](int j) { return half + j - 1; };
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i)
    for (int a : {2 * i - 1, 2 * i})
      for (int b : {2 * i - 1, 2 * i}) edges.push_back({x(a), y(b)});
  for (int i = 1; i <= k - 1; ++i) edges.push_back({x(2 * i), y(2 * i + 1)});
  BiconvexInstance out{Graph::from_edges(2 * half, edges), {}};
  for (int j = 1; j <= half; ++j) {
    out.ordering.order_x.push_back(x(j));
    out.ordering.order_y.push_back(y(j));
  }
  return out;
}

/// Hexagon 0..5 with the inner triangle 0-2-4.
inline Graph gen_sun() {
  return Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {2, 4}, {0, 4}});
}

/// K_n x K_n (Cartesian): vertex (r, c) = r * n + c.
inline Graph gen_rook(int n) {
  if (n < 1) throw PreconditionError("gen_rook: n must be at least 1");
  std::vector<Edge> edges;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int c2 = c + 1; c2 < n; ++c2) {
        edges.push_back({r * n + c, r * n + c2});
        edges.push_back({c * n + r, c2 * n + r});
      }
  return Graph::from_edges(n * n, edges);
}

inline Graph gen_random_tree(int n, Seed seed) {
  if (n < 1) throw PreconditionError("gen_random_tree: n must be at least 1");
  auto rng = make_rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({detail::uniform_int(rng, 0, v - 1), v});
  return detail::relabel(n, edges, detail::random_permutation(n, rng));
}

/// Uniform triangulation of an n-gon: the apex over chord (i, j) is drawn with weight
/// Cat(k-i-1) Cat(j-k-1), the number of ways to finish both sides.
inline Graph gen_random_mop(int n, Seed seed) {
  if (n < 3) throw PreconditionError("gen_random_mop: n must be at least 3");
  auto rng = make_rng(seed);
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  std::vector<std::pair<int, int>> work{{0, n - 1}};
  while (!work.empty()) {
    auto [i, j] = work.back();
    work.pop_back();
    if (j - i < 2) continue;
    std::vector<double> logw;
    for (int k = i + 1; k < j; ++k) logw.push_back(detail::log_catalan(k - i - 1) + detail::log_catalan(j - k - 1));
    const double top = *std::max_element(logw.begin(), logw.end());
    std::vector<double> w;
    for (double lw : logw) w.push_back(std::exp(lw - top));
    const int k = i + 1 + static_cast<int>(std::discrete_distribution<int>(w.begin(), w.end())(rng));
    if (k - i >= 2) edges.push_back({i, k});
    if (j - k >= 2) edges.push_back({k, j});
    work.push_back({i, k});
    work.push_back({k, j});
  }
  return detail::relabel(n, edges, detail::random_permutation(n, rng));
}

inline constexpr int kBicubicRetries = 100000;

/// Bipartite configuration model on two sides of n/2 vertices with three stubs each,
/// rejecting multi-edges and disconnected outcomes.
inline Graph gen_random_bicubic(int n, Seed seed) {
  if (n < 6 || n % 2 != 0) throw PreconditionError("gen_random_bicubic: n must be even and at least 6");
  auto rng = make_rng(seed);
  const int h = n / 2;
  std::vector<Vertex> stubs;
  for (int v = 0; v < h; ++v)
    for (int c = 0; c < 3; ++c) stubs.push_back(h + v);
  for (int attempt = 0; attempt < kBicubicRetries; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<Edge> seen;
    bool simple = true;
    for (int i = 0; i < 3 * h && simple; ++i) simple = seen.insert({i / 3, stubs[i]}).second;
    if (!simple) continue;
    Graph g = Graph::from_edges(n, std::vector<Edge>(seen.begin(), seen.end()));
    if (!is_connected(g)) continue;
    return detail::relabel(n, g.edges(), detail::random_permutation(n, rng));
  }
  throw Error("gen_random_bicubic: retry budget exhausted");
}

/// Biconvex graph with a known-good ordering: a core of Y-intervals with nondecreasing
/// endpoints (a strong ordering), a left flank of nested prefixes and a right flank of
/// nested suffixes. Ids are shuffled and the X ordering is sometimes reversed.
inline BiconvexInstance gen_random_biconvex(int nx, int ny, Seed seed) {
  if (nx < 1 || ny < 1) throw PreconditionError("gen_random_biconvex: both sides need a vertex");
  auto rng = make_rng(seed);
  const int m = ny;
  const int core = detail::uniform_int(rng, 1, nx);
  const int left = detail::uniform_int(rng, 0, nx - core);
  const int right = nx - core - left;

  std::vector<std::pair<int, int>> intervals;  // X position -> [lo, hi] over Y positions
  std::vector<std::pair<int, int>> core_iv;
  const int stride = std::max(1, (2 * m) / core);
  for (int i = 0; i < core; ++i) {
    int lo = i == 0 ? 0 : detail::uniform_int(rng, core_iv[i - 1].first, core_iv[i - 1].second);
    int floor_hi = i == 0 ? lo : std::max(lo, core_iv[i - 1].second);
    int hi = i + 1 == core ? m - 1 : std::min(m - 1, floor_hi + detail::uniform_int(rng, 0, stride));
    core_iv.push_back({lo, hi});
  }
  std::vector<int> prefix(static_cast<std::size_t>(left));
  for (int& p : prefix) p = detail::uniform_int(rng, 0, core_iv.front().second);
  std::sort(prefix.begin(), prefix.end());
  for (int p : prefix) intervals.push_back({0, p});
  intervals.insert(intervals.end(), core_iv.begin(), core_iv.end());
  std::vector<int> suffix(static_cast<std::size_t>(right));
  for (int& s : suffix) s = detail::uniform_int(rng, core_iv.back().first, m - 1);
  std::sort(suffix.begin(), suffix.end());
  for (int s : suffix) intervals.push_back({s, m - 1});

  const int n = nx + ny;
  auto perm = detail::random_permutation(n, rng);
  std::vector<Edge> edges;
  for (int i = 0; i < nx; ++i)
    for (int j = intervals[i].first; j <= intervals[i].second; ++j) edges.push_back({perm[i], perm[nx + j]});
  BiconvexInstance out{Graph::from_edges(n, edges), {}};
  for (int i = 0; i < nx; ++i) out.ordering.order_x.push_back(perm[i]);
  for (int j = 0; j < ny; ++j) out.ordering.order_y.push_back(perm[nx + j]);
  if (detail::uniform_int(rng, 0, 1) == 1) std::reverse(out.ordering.order_x.begin(), out.ordering.order_x.end());
  if (!validate_convex(out.graph, out.ordering)) throw VerificationError("gen_random_biconvex: emitted ordering is not biconvex");
  return out;
}

/// Random spanning tree plus every other pair with a random density in [0, 0.5].
inline Graph gen_random_connected(int n, Seed seed) {
  if (n < 1) throw PreconditionError("gen_random_connected: n must be at least 1");
  auto rng = make_rng(seed);
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) edges.insert({detail::uniform_int(rng, 0, v - 1), v});
  const double p = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.insert({u, v});
  return detail::relabel(n, std::vector<Edge>(edges.begin(), edges.end()), detail::random_permutation(n, rng));
}

inline constexpr int kMaxEnumeratedBicubic = 12;

namespace detail {

// Rows of a biadjacency matrix as column bitmasks.
using Biadjacency = std::vector<std::uint32_t>;

inline Biadjacency transpose(const Biadjacency& rows, int h) {
  Biadjacency cols(static_cast<std::size_t>(h), 0);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < h; ++c)
      if (rows[r] >> c & 1U) cols[c] |= 1U << r;
  return cols;
}

// Minimum sorted-row signature over all column permutations, for both side assignments.
inline Biadjacency canonical_form(const Biadjacency& rows, int h) {
  Biadjacency best;
  for (const auto& mat : {rows, transpose(rows, h)}) {
    std::vector<int> perm(static_cast<std::size_t>(h));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Biadjacency mapped;
      for (auto r : mat) {
        std::uint32_t out = 0;
        for (int c = 0; c < h; ++c)
          if (r >> c & 1U) out |= 1U << perm[c];
        mapped.push_back(out);
      }
      std::sort(mapped.begin(), mapped.end());
      if (best.empty() || mapped < best) best = mapped;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

inline Graph biadjacency_graph(const Biadjacency& rows, int h) {
  std::vector<Edge> edges;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < h; ++c)
      if (rows[r] >> c & 1U) edges.push_back({r, h + c});
  return Graph::from_edges(2 * h, edges);
}

}  // namespace detail

/// All connected cubic bipartite graphs on n vertices up to isomorphism (X = 0..n/2-1),
/// ordered by canonical form.
inline std::vector<Graph> enumerate_bicubic(int n) {
  if (n < 6 || n % 2 != 0 || n > kMaxEnumeratedBicubic)
    throw PreconditionError("enumerate_bicubic: n must be one of 6, 8, 10, 12; ingest larger orders from graph6");
  const int h = n / 2;
  std::vector<std::uint32_t> triples;
  for (std::uint32_t mask = 0; mask < (1U << h); ++mask)
    if (std::popcount(mask) == 3) triples.push_back(mask);

  std::set<detail::Biadjacency> seen;
  detail::Biadjacency rows;
  std::vector<int> col(static_cast<std::size_t>(h), 0);
  // rows in nondecreasing triple index; column sums capped at 3
  auto extend = [&](auto&& self, std::size_t from) -> void {
    const int placed = static_cast<int>(rows.size());
    if (placed == h) {
      auto canon = detail::canonical_form(rows, h);
      if (!seen.count(canon) && is_connected(detail::biadjacency_graph(rows, h))) seen.insert(canon);
      return;
    }
    for (int c = 0; c < h; ++c)
      if (3 - col[c] > h - placed) return;
    for (std::size_t t = from; t < triples.size(); ++t) {
      std::uint32_t mask = triples[t];
      bool fits = true;
      for (int c = 0; c < h; ++c)
        if ((mask >> c & 1U) && col[c] == 3) fits = false;
      if (!fits) continue;
      for (int c = 0; c < h; ++c) col[c] += mask >> c & 1U;
      rows.push_back(mask);
      self(self, t);
      rows.pop_back();
      for (int c = 0; c < h; ++c) col[c] -= mask >> c & 1U;
    }
  };
  extend(extend, 0);

  std::vector<Graph> out;
  for (const auto& canon : seen) out.push_back(detail::biadjacency_graph(canon, h));
  return out;
}

}  // namespace dompack
