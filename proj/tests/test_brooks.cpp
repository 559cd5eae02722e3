#include <gtest/gtest.h>

#include "dompack/brooks.hpp"
#include "dompack/generators.hpp"
#include "dompack/graph_io.hpp"

using namespace dompack;

namespace {

void expect_brooks(const Graph& g) {
  auto c = brooks_color(g);
  EXPECT_TRUE(is_proper_coloring(g, c.colors));
  if (!is_complete(g) && !is_odd_cycle(g)) {
    EXPECT_LE(c.count, std::max(g.max_degree(), 1)) << encode_graph6(g);
  }
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}

}  // namespace

TEST(Brooks, ExceptionalGraphs) {
  std::vector<Edge> k4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.push_back({i, j});
  EXPECT_EQ(brooks_color(Graph::from_edges(4, k4)).count, 4);
  EXPECT_EQ(brooks_color(cycle(7)).count, 3);
  EXPECT_EQ(brooks_color(cycle(8)).count, 2);
  EXPECT_EQ(brooks_color(Graph(1)).count, 1);
}

TEST(Brooks, RegularTwoConnected) {
  expect_brooks(decode_graph6("IheA@GUAo"));  // Petersen
  EXPECT_EQ(brooks_color(decode_graph6("IheA@GUAo")).count, 3);
  expect_brooks(gen_rook(3));
  expect_brooks(gen_rook(4));
  for (Seed s = 0; s < 20; ++s) expect_brooks(gen_random_bicubic(18, s));
}

TEST(Brooks, NonRegularGluedAtVertex) {
  // two pieces glued at vertex 0
  std::vector<Edge> e;
  auto piece = [&](int base) {
    // vertices base..base+3 form K4 minus {base, base+1}; 0 joins base and base+1
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!(i == 0 && j == 1)) e.push_back({base + i, base + j});
    e.push_back({0, base});
    e.push_back({0, base + 1});
  };
  piece(1);
  piece(5);
  auto g = Graph::from_edges(9, e);
  ASSERT_EQ(g.min_degree(), 3);
  ASSERT_EQ(g.max_degree(), 4);
  expect_brooks(g);
}

TEST(Brooks, CubicWithBridge) {
  // two copies of K4 with one edge subdivided, the subdivision vertices joined
  std::vector<Edge> e;
  auto half = [&](int b) {
    e.insert(e.end(), {{b, b + 2}, {b, b + 3}, {b + 1, b + 2}, {b + 1, b + 3}, {b + 2, b + 3}, {b, b + 4}, {b + 1, b + 4}});
  };
  half(0);
  half(5);
  e.push_back({4, 9});
  auto g = Graph::from_edges(10, e);
  ASSERT_EQ(g.min_degree(), 3);
  ASSERT_EQ(g.max_degree(), 3);
  expect_brooks(g);
}

TEST(Brooks, CubicWithCutVertex) {
  // vertex 0 joined to the subdivision vertex of three K4s with a subdivided edge
  std::vector<Edge> e;
  for (int b : {1, 6, 11}) {
    e.insert(e.end(), {{b, b + 2}, {b, b + 3}, {b + 1, b + 2}, {b + 1, b + 3}, {b + 2, b + 3}, {b, b + 4}, {b + 1, b + 4}});
    e.push_back({0, b + 4});
  }
  auto g = Graph::from_edges(16, e);
  ASSERT_EQ(g.min_degree(), 3);
  ASSERT_EQ(g.max_degree(), 3);
  expect_brooks(g);
}

TEST(Brooks, RandomConnected) {
  for (Seed s = 0; s < 100; ++s) expect_brooks(gen_random_connected(2 + static_cast<int>(s % 20), s));
}

TEST(Brooks, RejectsDisconnected) {
  EXPECT_THROW(brooks_color(Graph(2)), PreconditionError);
}
