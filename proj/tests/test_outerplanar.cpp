#include <gtest/gtest.h>

#include <set>

#include "dompack/exact.hpp"
#include "dompack/generators.hpp"
#include "dompack/outerplanar.hpp"
#include "oracle.hpp"

using namespace dompack;

namespace {

Graph fan(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({0, v});
  for (int v = 1; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edges(n, e);
}

// Independent of the dual tree: every edge uv with two common neighbors a, b spans two
// triangles sharing uv, and u, v, a, b must carry four different colors.
bool rhombi_rainbow(const Graph& g, const std::vector<int>& colors) {
  auto adj = oracle::adjacency(g);
  for (auto [u, v] : g.edges()) {
    std::vector<int> common;
    for (int w = 0; w < g.order(); ++w)
      if (adj[u][w] && adj[v][w]) common.push_back(w);
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        std::set<int> c{colors[u], colors[v], colors[common[i]], colors[common[j]]};
        if (c.size() != 4) return false;
      }
  }
  return true;
}

}  // namespace

TEST(MopRecognition, AcceptsTriangulations) {
  auto sun = recognize_mop(gen_sun());
  ASSERT_TRUE(sun);
  EXPECT_EQ(sun.triangulation->triangle_count(), 4);
  EXPECT_EQ(sun.triangulation->boundary.size(), 6u);
  EXPECT_TRUE(recognize_mop(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}})));
  EXPECT_TRUE(recognize_mop(fan(9)));
  for (Seed s = 0; s < 50; ++s) {
    auto g = gen_random_mop(3 + static_cast<int>(s % 20), s);
    auto rec = recognize_mop(g);
    ASSERT_TRUE(rec) << rec.rejection;
    const auto& b = rec.triangulation->boundary;
    EXPECT_EQ(static_cast<int>(b.size()), g.order());
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_TRUE(g.adjacent(b[i], b[(i + 1) % b.size()]));
  }
}

TEST(MopRecognition, RejectsOthers) {
  std::vector<Edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_FALSE(recognize_mop(Graph::from_edges(4, k4)));
  EXPECT_FALSE(recognize_mop(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  EXPECT_FALSE(recognize_mop(gen_random_tree(6, 1)));
  EXPECT_FALSE(recognize_mop(Graph(2)));
  // K_{2,3} plus the edge between the two hubs: 2n - 3 edges, not outerplanar
  std::vector<Edge> k23{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {0, 1}};
  auto rec = recognize_mop(Graph::from_edges(5, k23));
  EXPECT_FALSE(rec);
  EXPECT_FALSE(rec.rejection.empty());
  EXPECT_THROW(require_mop(gen_random_tree(5, 2)), PreconditionError);
}

TEST(DualTree, IsATreeOnTriangles) {
  for (Seed s = 0; s < 30; ++s) {
    auto t = require_mop(gen_random_mop(4 + static_cast<int>(s % 15), s));
    auto d = build_dual(t);
    EXPECT_EQ(d.tree.order(), t.graph.order() - 2);
    EXPECT_EQ(d.tree.size() + 1, static_cast<std::size_t>(d.tree.order()));
    EXPECT_TRUE(is_connected(d.tree));
    EXPECT_LE(d.tree.max_degree(), 3);
  }
}

TEST(CliqueGraph, SunIsComplete) {
  auto t = require_mop(gen_sun());
  auto cg = build_clique_graph(t);
  EXPECT_EQ(cg.graph.order(), 4);
  EXPECT_EQ(cg.graph.size(), 6u);
}

TEST(CliqueGraph, GammaEqualsRho) {
  for (Seed s = 0; s < 60; ++s) {
    auto t = require_mop(gen_random_mop(4 + static_cast<int>(s % 15), 300 + s));
    auto cg = build_clique_graph(t);
    EXPECT_EQ(oracle::gamma(cg.graph), oracle::rho(cg.graph));
  }
}

TEST(RhombusColoring, RainbowRhombi) {
  for (Seed s = 0; s < 60; ++s) {
    auto t = require_mop(gen_random_mop(3 + static_cast<int>(s % 18), 700 + s));
    auto c = tokunaga_color(t);
    EXPECT_TRUE(rhombi_rainbow(t.graph, c.colors));
    EXPECT_TRUE(verify_four_coloring(t, build_dual(t), c));
  }
  auto sun = require_mop(gen_sun());
  EXPECT_TRUE(rhombi_rainbow(sun.graph, tokunaga_color(sun).colors));
}

TEST(RhombusColoring, VerifierCatchesBadColorings) {
  auto t = require_mop(fan(6));
  auto d = build_dual(t);
  FourColoring c{std::vector<int>(6, 1)};
  EXPECT_FALSE(verify_four_coloring(t, d, c));
  // proper 3-coloring of a fan: rhombi repeat a color
  FourColoring three{{1, 2, 3, 2, 3, 2}};
  EXPECT_FALSE(verify_four_coloring(t, d, three));
}

TEST(Projection, SizeAndDomination) {
  for (Seed s = 0; s < 40; ++s) {
    auto t = require_mop(gen_random_mop(4 + static_cast<int>(s % 15), 900 + s));
    auto cg = build_clique_graph(t);
    auto z = domination_number(cg.graph).witness;
    auto x = project_dominating(t, cg, z);
    EXPECT_TRUE(oracle::is_dominating(t.graph, x.members()));
    EXPECT_LE(x.size(), 3 * z.size());
    auto av = averaged_dominating(t, x, tokunaga_color(t));
    for (const auto& cand : av.candidates) EXPECT_TRUE(oracle::is_dominating(t.graph, cand.members()));
    EXPECT_LE(4 * av.best().size(), 3 * x.size() + static_cast<std::size_t>(av.low_degree_count));
  }
  auto t = require_mop(gen_sun());
  auto cg = build_clique_graph(t);
  EXPECT_THROW(project_dominating(t, cg, VertexSet(4, {})), PreconditionError);
}

TEST(LiftPacking, SameSizeAsCliquePacking) {
  for (Seed s = 0; s < 80; ++s) {
    auto t = require_mop(gen_random_mop(4 + static_cast<int>(s % 15), 1100 + s));
    auto d = build_dual(t);
    auto cg = build_clique_graph(t);
    auto z = packing_number(cg.graph).witness;
    auto y = lift_packing(t, d, cg, z);
    EXPECT_EQ(y.size(), z.size());
    EXPECT_TRUE(oracle::is_packing(t.graph, y.members()));
  }
  auto t = require_mop(gen_sun());
  auto y = lift_packing(t, build_dual(t), build_clique_graph(t), VertexSet(4, {0}));
  EXPECT_EQ(y.size(), 1u);
  EXPECT_THROW(lift_packing(t, build_dual(t), build_clique_graph(t), VertexSet(4, {0, 1})), PreconditionError);
}

TEST(MopBounds, AveragedBoundOnRandomMops) {
  for (Seed s = 0; s < 60; ++s) {
    auto g = gen_random_mop(4 + static_cast<int>(s % 15), 1500 + s);
    int gamma = oracle::gamma(g);
    int rho = oracle::rho(g);
    int t = 0;
    for (Vertex v = 0; v < g.order(); ++v) t += g.degree(v) <= 3;
    EXPECT_LE(gamma, 3 * rho);
    EXPECT_LE(4 * gamma, 9 * rho + t);
  }
}

TEST(MopBounds, SunMeetsTwoRho) {
  auto g = gen_sun();
  EXPECT_EQ(oracle::gamma(g), 2);
  EXPECT_EQ(oracle::rho(g), 1);
}
