#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dompack/bounds.hpp"
#include "dompack/exact.hpp"
#include "dompack/graph.hpp"
#include "dompack/report.hpp"

namespace dompack {

namespace detail {

inline std::vector<int> positions(int n, const std::vector<Vertex>& order) {
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  return pos;
}

// Neighbors of v among `allowed` sorted by position in the opposite ordering.
inline std::vector<Vertex> ordered_neighbors(const Graph& g, Vertex v, const std::vector<int>& pos,
                                             const std::vector<char>* allowed = nullptr) {
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v))
    if (!allowed || (*allowed)[u]) out.push_back(u);
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  return out;
}

inline bool is_interval(const std::vector<Vertex>& sorted_members, const std::vector<int>& pos) {
  if (sorted_members.empty()) return true;
  return pos[sorted_members.back()] - pos[sorted_members.front()] + 1 ==
         static_cast<int>(sorted_members.size());
}

inline bool is_permutation_of_sides(const Graph& g, const ConvexOrdering& ord) {
  const int n = g.order();
  if (static_cast<int>(ord.order_x.size() + ord.order_y.size()) != n) return false;
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (Vertex v : ord.order_x) {
    if (!g.valid_vertex(v) || side[v] != -1) return false;
    side[v] = 0;
  }
  for (Vertex v : ord.order_y) {
    if (!g.valid_vertex(v) || side[v] != -1) return false;
    side[v] = 1;
  }
  for (auto [u, v] : g.edges())
    if (side[u] == side[v]) return false;
  return true;
}

}  // namespace detail

/// Both orderings cover their sides and every neighborhood is an interval of the
/// opposite ordering.
inline bool validate_convex(const Graph& g, const ConvexOrdering& ord) {
  if (!detail::is_permutation_of_sides(g, ord)) return false;
  auto pos_x = detail::positions(g.order(), ord.order_x);
  auto pos_y = detail::positions(g.order(), ord.order_y);
  for (Vertex y : ord.order_y)
    if (!detail::is_interval(detail::ordered_neighbors(g, y, pos_x), pos_x)) return false;
  for (Vertex x : ord.order_x)
    if (!detail::is_interval(detail::ordered_neighbors(g, x, pos_y), pos_y)) return false;
  return true;
}

/// Strong ordering on the subgraph induced by `members`: whenever x_i y_c and x_k y_a are
/// edges with i <= k and a <= c, so are x_i y_a and x_k y_c.
inline bool is_strong_ordering(const Graph& g, const std::vector<Vertex>& order_x,
                               const std::vector<Vertex>& order_y) {
  const int nx = static_cast<int>(order_x.size());
  const int ny = static_cast<int>(order_y.size());
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(nx), std::vector<char>(static_cast<std::size_t>(ny), 0));
  for (int i = 0; i < nx; ++i)
    for (int a = 0; a < ny; ++a) adj[i][a] = g.adjacent(order_x[i], order_y[a]);
  for (int i = 0; i < nx; ++i)
    for (int k = i; k < nx; ++k)
      for (int a = 0; a < ny; ++a) {
        if (!adj[k][a]) continue;
        for (int c = a; c < ny; ++c)
          if (adj[i][c] && (!adj[i][a] || !adj[k][c])) return false;
      }
  return true;
}

/// The bipartite permutation core: X positions left..right of the (possibly reversed)
/// X ordering, together with all of Y.
struct TrimmedCore {
  ConvexOrdering ordering;
  bool reversed = false;
  int left = 0;   // position of x_L
  int right = 0;  // position of x_R
  std::vector<Vertex> core_x;
  std::vector<char> in_core;  // indexed by vertex id

  Vertex x_left() const { return ordering.order_x[left]; }
  Vertex x_right() const { return ordering.order_x[right]; }
  Vertex x_first() const { return ordering.order_x.front(); }
  Vertex x_last() const { return ordering.order_x.back(); }
  bool trimmed() const { return left > 0 || right + 1 < static_cast<int>(ordering.order_x.size()); }

  std::vector<Vertex> core_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(in_core.size()); ++v)
      if (in_core[v]) out.push_back(v);
    return out;
  }
};

namespace detail {

inline bool properly_contained(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Among N(y), the vertices whose neighborhood is not properly contained in another
// X-neighborhood; returns the extreme one by position (smallest when `leftmost`).
inline Vertex maximal_end(const Graph& g, Vertex y, const ConvexOrdering& ord,
                          const std::vector<int>& pos_x, bool leftmost) {
  std::vector<std::vector<Vertex>> nbhd;
  for (Vertex x : ord.order_x) {
    auto nb = g.neighbors(x);
    nbhd.emplace_back(nb.begin(), nb.end());
  }
  Vertex pick = -1;
  for (Vertex x : g.neighbors(y)) {
    const auto& mine = nbhd[pos_x[x]];
    bool dominated = std::any_of(nbhd.begin(), nbhd.end(),
                                 [&](const std::vector<Vertex>& other) { return properly_contained(mine, other); });
    if (dominated) continue;
    if (pick == -1 || (leftmost ? pos_x[x] < pos_x[pick] : pos_x[x] > pos_x[pick])) pick = x;
  }
  return pick;
}

inline TrimmedCore locate_core(const Graph& g, const ConvexOrdering& ord) {
  TrimmedCore core;
  core.ordering = ord;
  auto pos_x = positions(g.order(), ord.order_x);
  Vertex xl = maximal_end(g, ord.order_y.front(), ord, pos_x, true);
  Vertex xr = maximal_end(g, ord.order_y.back(), ord, pos_x, false);
  core.left = pos_x[xl];
  core.right = pos_x[xr];
  return core;
}

}  // namespace detail

/// Trims the flanks x_1..x_{L-1} and x_{R+1}..x_n that a biconvex ordering hangs off its
/// bipartite permutation core. x_L / x_R are the members of N(y_1) / N(y_m) with maximal
/// neighborhoods, ties to the smallest / largest position; the X ordering is reversed
/// when x_L comes after x_R. Fails when the flanks are not nested or the core ordering is
/// not strong.
inline TrimmedCore trim_core(const Graph& g, const ConvexOrdering& ord) {
  if (!validate_convex(g, ord)) throw PreconditionError("trim_core: ordering is not biconvex");
  if (ord.order_x.empty() || ord.order_y.empty()) throw PreconditionError("trim_core: empty side");
  if (!is_connected(g)) throw PreconditionError("trim_core: graph is not connected");

  TrimmedCore core = detail::locate_core(g, ord);
  if (core.left > core.right) {
    ConvexOrdering flipped = ord;
    std::reverse(flipped.order_x.begin(), flipped.order_x.end());
    core = detail::locate_core(g, flipped);
    core.reversed = true;
    if (core.left > core.right)
      throw PreconditionError("trim_core: x_L follows x_R in both directions of the X ordering");
  }

  const auto& ox = core.ordering.order_x;
  auto nbhd = [&](Vertex x) { return std::vector<Vertex>(g.neighbors(x).begin(), g.neighbors(x).end()); };
  auto contained = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (int i = 0; i < core.left; ++i)
    if (!contained(nbhd(ox[i]), nbhd(ox[i + 1])))
      throw PreconditionError("trim_core: left flank is not nested at position " + std::to_string(i) +
                              "; supply an ordering with nested flanks");
  for (int i = core.right; i + 1 < static_cast<int>(ox.size()); ++i)
    if (!contained(nbhd(ox[i + 1]), nbhd(ox[i])))
      throw PreconditionError("trim_core: right flank is not nested at position " + std::to_string(i + 1) +
                              "; supply an ordering with nested flanks");

  core.core_x.assign(ox.begin() + core.left, ox.begin() + core.right + 1);
  core.in_core.assign(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : core.core_x) core.in_core[x] = 1;
  for (Vertex y : core.ordering.order_y) core.in_core[y] = 1;

  auto sub = induced_subgraph(g, core.core_vertices());
  if (!is_connected(sub.graph)) throw PreconditionError("trim_core: core is disconnected");
  if (!is_strong_ordering(g, core.core_x, core.ordering.order_y))
    throw PreconditionError("trim_core: core ordering is not strong");
  return core;
}

/// Treats a whole bipartite permutation graph (with a strong ordering) as its own core.
inline TrimmedCore whole_core(const Graph& g, const ConvexOrdering& ord) {
  if (!validate_convex(g, ord)) throw PreconditionError("whole_core: ordering is not biconvex");
  if (!is_connected(g)) throw PreconditionError("whole_core: graph is not connected");
  if (!is_strong_ordering(g, ord.order_x, ord.order_y))
    throw PreconditionError("whole_core: ordering is not strong");
  TrimmedCore core;
  core.ordering = ord;
  core.left = 0;
  core.right = static_cast<int>(ord.order_x.size()) - 1;
  core.core_x = ord.order_x;
  core.in_core.assign(static_cast<std::size_t>(g.order()), 1);
  return core;
}

/// One K_i u J_i step: K_i complete bipartite, J_i isolated leftovers on one side.
struct CBBlock {
  std::vector<Vertex> k_x;  // ordered
  std::vector<Vertex> k_y;
  std::vector<Vertex> j;    // ordered along its side
  std::optional<Side> j_side;

  Vertex l_x() const { return k_x.front(); }
  Vertex r_x() const { return k_x.back(); }
  Vertex l_y() const { return k_y.front(); }
  Vertex r_y() const { return k_y.back(); }

  std::vector<Vertex> k_vertices() const {
    std::vector<Vertex> out(k_x);
    out.insert(out.end(), k_y.begin(), k_y.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct CBDecomposition {
  std::vector<CBBlock> blocks;

  int width() const { return static_cast<int>(blocks.size()); }
};

/// Complete bipartite decomposition of the core: K_i is induced by the neighborhoods of
/// the first remaining X and Y vertices, J_i the vertices left isolated; repeat.
inline CBDecomposition cb_decompose(const Graph& g, const TrimmedCore& core) {
  const int n = g.order();
  const auto& oy = core.ordering.order_y;
  auto pos_x = detail::positions(n, core.core_x);
  auto pos_y = detail::positions(n, oy);
  auto pos = [&](Vertex v) { return pos_x[v] != -1 ? pos_x[v] : pos_y[v]; };

  std::vector<char> alive(core.in_core);
  int remaining = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
  auto live_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex u : g.neighbors(v)) d += alive[u];
    return d;
  };
  auto fail = [](const std::string& what) -> void {
    throw PreconditionError("cb_decompose: not a bipartite permutation core (" + what + ")");
  };

  CBDecomposition dec;
  while (remaining > 0) {
    auto first_alive = [&](const std::vector<Vertex>& order) -> Vertex {
      for (Vertex v : order)
        if (alive[v]) return v;
      return -1;
    };
    Vertex a1 = first_alive(core.core_x);
    Vertex b1 = first_alive(oy);
    if (a1 == -1 || b1 == -1) fail("isolated vertices left after a block");
    CBBlock block;
    std::vector<char> in_k(static_cast<std::size_t>(n), 0);
    for (Vertex u : g.neighbors(a1))
      if (alive[u]) in_k[u] = 1;
    for (Vertex u : g.neighbors(b1))
      if (alive[u]) in_k[u] = 1;
    for (Vertex x : core.core_x)
      if (in_k[x]) block.k_x.push_back(x);
    for (Vertex y : oy)
      if (in_k[y]) block.k_y.push_back(y);
    if (block.k_x.empty() || block.k_y.empty()) fail("block without an edge");
    for (Vertex v = 0; v < n; ++v)
      if (in_k[v]) {
        alive[v] = 0;
        --remaining;
      }
    std::vector<Vertex> isolated;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && live_degree(v) == 0) isolated.push_back(v);
    for (Vertex v : isolated) {
      alive[v] = 0;
      --remaining;
    }
    std::sort(isolated.begin(), isolated.end(), [&](Vertex a, Vertex b) { return pos(a) < pos(b); });
    block.j = isolated;
    if (!isolated.empty()) {
      bool all_x = std::all_of(isolated.begin(), isolated.end(), [&](Vertex v) { return pos_x[v] != -1; });
      bool all_y = std::all_of(isolated.begin(), isolated.end(), [&](Vertex v) { return pos_y[v] != -1; });
      if (!all_x && !all_y) fail("J block spans both sides");
      block.j_side = all_x ? Side::x : Side::y;
    }
    dec.blocks.push_back(std::move(block));
  }

  // each K block complete bipartite, adjacent exactly to its neighbors in the sequence
  const int k = dec.width();
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i)
    for (Vertex v : dec.blocks[i].k_vertices()) block_of[v] = i;
  for (int i = 0; i < k; ++i) {
    const auto& b = dec.blocks[i];
    for (Vertex x : b.k_x)
      for (Vertex y : b.k_y)
        if (!g.adjacent(x, y)) fail("K block is not complete bipartite");
  }
  std::vector<std::vector<char>> touches(static_cast<std::size_t>(k), std::vector<char>(static_cast<std::size_t>(k), 0));
  for (auto [u, v] : g.edges())
    if (block_of[u] != -1 && block_of[v] != -1 && block_of[u] != block_of[v])
      touches[block_of[u]][block_of[v]] = touches[block_of[v]][block_of[u]] = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && static_cast<bool>(touches[i][j]) != (std::abs(i - j) == 1))
        fail("K_" + std::to_string(i + 1) + " / K_" + std::to_string(j + 1) + " adjacency");

  // J members: one side, neighbors inside K_i, nested, adjacent to the opposite-side r vertex
  for (int i = 0; i < k; ++i) {
    const auto& b = dec.blocks[i];
    auto kv = b.k_vertices();
    std::vector<Vertex> prev_nb;
    for (std::size_t t = 0; t < b.j.size(); ++t) {
      Vertex z = b.j[t];
      std::vector<Vertex> nb;
      for (Vertex u : g.neighbors(z))
        if (core.in_core[u]) nb.push_back(u);
      if (!std::includes(kv.begin(), kv.end(), nb.begin(), nb.end())) fail("N(J_i) outside K_i");
      if (t > 0 && !std::includes(prev_nb.begin(), prev_nb.end(), nb.begin(), nb.end()))
        fail("J_i neighborhoods not nested");
      Vertex r = *b.j_side == Side::y ? b.r_x() : b.r_y();
      if (!g.adjacent(z, r)) fail("J_i member not adjacent to the opposite r-vertex");
      prev_nb = nb;
    }
  }
  return dec;
}

enum class CertificateKind { packing, dominating };

/// A verified vertex set and the relation it certifies against the width k:
/// |set| >= claimed for packings, |set| <= claimed for dominating sets.
struct Certificate {
  CertificateKind kind = CertificateKind::packing;
  VertexSet set;
  int claimed = 0;
  int width = 0;
  std::string construction;  // which branch fired

  bool meets_claim() const {
    return kind == CertificateKind::packing ? static_cast<int>(set.size()) >= claimed
                                            : static_cast<int>(set.size()) <= claimed;
  }
};

namespace detail {

inline int max_distance_from(const Graph& g, Vertex from, const std::vector<Vertex>& targets) {
  if (targets.empty()) return 0;  // vacuous maximum
  auto dist = distances_from(g, from);
  int best = 0;
  for (Vertex t : targets) best = std::max(best, dist[t]);
  return best;
}

inline VertexSet make_set(const Graph& g, std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return VertexSet(g.order(), std::move(members));
}

inline Certificate finish(const Graph& g, CertificateKind kind, std::vector<Vertex> members, int claimed,
                          int width, std::string construction) {
  Certificate c{kind, make_set(g, std::move(members)), claimed, width, std::move(construction)};
  bool ok = kind == CertificateKind::packing ? is_packing(g, c.set) : is_dominating(g, c.set);
  if (!ok || !c.meets_claim())
    throw VerificationError("certificate " + c.construction + " failed verification");
  return c;
}

// ell_X(K_i) on blocks of one parity, ell_Y(K_i) on the other, for i in [from, k].
inline std::vector<Vertex> alternating_lefts(const CBDecomposition& dec, int from, bool x_on_odd) {
  std::vector<Vertex> out;
  for (int i = from; i <= dec.width(); ++i) {
    const auto& b = dec.blocks[i - 1];
    bool odd = i % 2 == 1;
    out.push_back(odd == x_on_odd ? b.l_x() : b.l_y());
  }
  return out;
}

inline std::optional<Vertex> first_in_order(const std::vector<Vertex>& order, auto pred) {
  for (Vertex v : order)
    if (pred(v)) return v;
  return std::nullopt;
}

}  // namespace detail

/// Packing of size k, or k + 1 when x_n only sees J_k or J_1 reaches distance 3 from x_1.
inline Certificate construct_packing(const Graph& g, const TrimmedCore& core, const CBDecomposition& dec) {
  const int k = dec.width();
  if (k < 1) throw PreconditionError("construct_packing: empty decomposition");
  const Vertex x1 = core.x_first();
  const Vertex xn = core.x_last();
  const auto& first = dec.blocks.front();
  const auto& last = dec.blocks.back();

  auto base = detail::alternating_lefts(dec, 1, true);

  // N(x_n) within J_k
  std::vector<Vertex> jk = last.j;
  std::sort(jk.begin(), jk.end());
  auto nxn = g.neighbors(xn);
  if (!nxn.empty() && std::includes(jk.begin(), jk.end(), nxn.begin(), nxn.end())) {
    auto members = base;
    members.push_back(xn);
    return detail::finish(g, CertificateKind::packing, members, k + 1, k, "packing-last-in-J");
  }

  if (detail::max_distance_from(g, x1, first.j) >= 3) {
    auto dist = distances_from(g, x1);
    Vertex far = *detail::first_in_order(first.j, [&](Vertex v) { return dist[v] >= 3; });
    // J_1 in X keeps ell_X on odd blocks; J_1 in Y swaps the parity.
    const bool j_in_x = *first.j_side == Side::x;
    auto members = detail::alternating_lefts(dec, 2, j_in_x);
    members.push_back(x1);
    members.push_back(far);
    return detail::finish(g, CertificateKind::packing, members, k + 1, k,
                          j_in_x ? "packing-far-J1-in-X" : "packing-far-J1-in-Y");
  }

  return detail::finish(g, CertificateKind::packing, base, k, k, "packing-alternating");
}

/// Dominating set of size <= 2k in the tight configuration, <= 2k + 2 otherwise; for
/// k = 1 the two cases split on d(x_1, x_n).
inline Certificate construct_dominating(const Graph& g, const TrimmedCore& core, const CBDecomposition& dec) {
  const int k = dec.width();
  if (k < 1) throw PreconditionError("construct_dominating: empty decomposition");
  const Vertex x1 = core.x_first();
  const Vertex xn = core.x_last();
  const auto& oy = core.ordering.order_y;
  const auto& first = dec.blocks.front();
  const auto& last = dec.blocks.back();
  auto adjacent_to = [&](Vertex a) { return [&g, a](Vertex v) { return g.adjacent(a, v); }; };

  if (k == 1) {
    const int d = distance(g, x1, xn);
    if (d <= 2) {
      Vertex hub = *detail::first_in_order(oy, [&](Vertex y) {
        return g.adjacent(x1, y) && (x1 == xn || g.adjacent(xn, y));
      });
      return detail::finish(g, CertificateKind::dominating, {first.l_x(), hub}, 2, k, "dominating-width1-near");
    }
    Vertex left_hub = *detail::first_in_order(oy, adjacent_to(x1));
    Vertex right_hub = *detail::first_in_order(oy, adjacent_to(xn));
    return detail::finish(g, CertificateKind::dominating, {first.r_x(), first.r_y(), left_hub, right_hub}, 4, k,
                          "dominating-width1-far");
  }

  std::vector<Vertex> middle;
  for (int i = 2; i <= k - 1; ++i) {
    middle.push_back(dec.blocks[i - 1].r_x());
    middle.push_back(dec.blocks[i - 1].r_y());
  }

  std::vector<Vertex> last_k = last.k_vertices();
  auto in_last_k = [&](Vertex v) { return std::binary_search(last_k.begin(), last_k.end(), v); };
  const bool near_j1 = detail::max_distance_from(g, x1, first.j) <= 2;
  const bool xn_meets_kk = std::any_of(g.neighbors(xn).begin(), g.neighbors(xn).end(), in_last_k);
  const bool j1_ok = !first.j_side || *first.j_side == Side::x;

  if (near_j1 && xn_meets_kk && j1_ok) {
    auto left_hub = detail::first_in_order(oy, [&](Vertex y) {
      if (!g.adjacent(x1, y)) return false;
      return std::all_of(first.j.begin(), first.j.end(), [&](Vertex z) { return g.adjacent(z, y); });
    });
    auto right_hub = detail::first_in_order(oy, [&](Vertex y) { return g.adjacent(xn, y) && in_last_k(y); });
    if (left_hub && right_hub) {
      auto members = middle;
      members.insert(members.end(), {first.r_x(), *left_hub, *right_hub, last.r_x()});
      return detail::finish(g, CertificateKind::dominating, members, 2 * k, k, "dominating-2k");
    }
  }

  Vertex left_hub = *detail::first_in_order(oy, adjacent_to(x1));
  Vertex right_hub = *detail::first_in_order(oy, adjacent_to(xn));
  auto members = middle;
  members.insert(members.end(), {first.r_x(), first.r_y(), last.r_x(), last.r_y(), left_hub, right_hub});
  return detail::finish(g, CertificateKind::dominating, members, 2 * k + 2, k, "dominating-2k+2");
}

/// Everything the biconvex pipeline produces for one graph.
struct BiconvexCertificates {
  TrimmedCore core;
  CBDecomposition decomposition;
  Certificate packing;
  Certificate dominating;
  // For k = 1 with d(x_1, x_n) >= 3, {x_1, x_n} certifies rho >= 2.
  std::optional<Certificate> end_packing;
};

inline BiconvexCertificates certify_biconvex(const Graph& g, const ConvexOrdering& ord) {
  BiconvexCertificates out;
  out.core = trim_core(g, ord);
  out.decomposition = cb_decompose(g, out.core);
  out.packing = construct_packing(g, out.core, out.decomposition);
  out.dominating = construct_dominating(g, out.core, out.decomposition);
  if (out.decomposition.width() == 1 && out.dominating.construction == "dominating-width1-far")
    out.end_packing = detail::finish(g, CertificateKind::packing, {out.core.x_first(), out.core.x_last()}, 2, 1,
                                     "packing-width1-ends");
  return out;
}

/// Exact gamma <= 2 rho as a scan record, with both certificates attached.
inline ScanRecord check_biconvex_bound(const Graph& g, const ConvexOrdering& ord, const std::string& id = "",
                                       long long budget = kDefaultBudget) {
  auto certs = certify_biconvex(g, ord);
  auto facts = solve_facts(g, "biconvex", id, budget);
  auto rec = *evaluate_bound(find_bound("biconvex-2rho"), facts, false);
  rec.certificates["packing_certificate"] = certs.packing.set.members();
  rec.certificates["dominating_certificate"] = certs.dominating.set.members();
  rec.certificates["width"] = {certs.decomposition.width()};
  return rec;
}

}  // namespace dompack
