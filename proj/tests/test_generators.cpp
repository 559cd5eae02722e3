#include <gtest/gtest.h>

#include <set>

#include "dompack/bicubic.hpp"
#include "dompack/biconvex.hpp"
#include "dompack/generators.hpp"
#include "dompack/graph_io.hpp"
#include "dompack/outerplanar.hpp"
#include "oracle.hpp"

using namespace dompack;

TEST(Generators, SameSeedSameGraph) {
  for (Seed s = 0; s < 10; ++s) {
    EXPECT_EQ(encode_graph6(gen_random_mop(12, s)), encode_graph6(gen_random_mop(12, s)));
    EXPECT_EQ(encode_graph6(gen_random_bicubic(18, s)), encode_graph6(gen_random_bicubic(18, s)));
    EXPECT_EQ(encode_graph6(gen_random_tree(25, s)), encode_graph6(gen_random_tree(25, s)));
    EXPECT_EQ(gen_random_biconvex(6, 7, s).graph, gen_random_biconvex(6, 7, s).graph);
  }
  EXPECT_NE(encode_graph6(gen_random_mop(14, 1)), encode_graph6(gen_random_mop(14, 2)));
}

TEST(Generators, StreamsDependOnIndex) {
  auto a = make_rng(7, 0);
  auto b = make_rng(7, 1);
  EXPECT_NE(a(), b());
}

TEST(Generators, TreesAreTrees) {
  for (Seed s = 0; s < 50; ++s) {
    int n = 1 + static_cast<int>(s % 40);
    auto t = gen_random_tree(n, s);
    EXPECT_EQ(t.order(), n);
    EXPECT_EQ(static_cast<int>(t.size()), n - 1);
    EXPECT_TRUE(is_connected(t));
  }
}

TEST(Generators, MopsAreMaximalOuterplanar) {
  for (Seed s = 0; s < 50; ++s) {
    int n = 3 + static_cast<int>(s % 20);
    auto g = gen_random_mop(n, s);
    EXPECT_EQ(static_cast<int>(g.size()), 2 * n - 3);
    EXPECT_TRUE(recognize_mop(g));
  }
  EXPECT_THROW(gen_random_mop(2, 0), PreconditionError);
}

TEST(Generators, BicubicGraphs) {
  for (Seed s = 0; s < 30; ++s) {
    int n = 6 + 2 * static_cast<int>(s % 10);
    auto g = gen_random_bicubic(n, s);
    EXPECT_EQ(g.order(), n);
    EXPECT_TRUE(is_bicubic(g));
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(bipartition(g).has_value());
    EXPECT_EQ(g.min_degree(), 3);
    EXPECT_EQ(g.max_degree(), 3);
  }
  EXPECT_THROW(gen_random_bicubic(7, 0), PreconditionError);
}

TEST(Generators, BiconvexOrderingsValidate) {
  for (Seed s = 0; s < 100; ++s) {
    auto inst = gen_random_biconvex(1 + static_cast<int>(s % 10), 1 + static_cast<int>((s / 10) % 10), s);
    EXPECT_TRUE(validate_convex(inst.graph, inst.ordering));
    EXPECT_TRUE(is_connected(inst.graph));
    EXPECT_NO_THROW(trim_core(inst.graph, inst.ordering));
  }
}

TEST(Generators, FixedFamilies) {
  auto sun = gen_sun();
  EXPECT_EQ(sun.order(), 6);
  EXPECT_EQ(sun.size(), 9u);
  auto rook = gen_rook(4);
  EXPECT_EQ(rook.order(), 16);
  EXPECT_EQ(rook.max_degree(), 6);
  EXPECT_EQ(encode_graph6(rook), "O~`HW}GPHDaNaGPCcPWaN");
  auto tight = gen_tight_family(5);
  EXPECT_EQ(encode_graph6(tight.graph), "S???????E?W?[?K?B_?W?@o?B??B_?@_?");
  EXPECT_TRUE(validate_convex(tight.graph, tight.ordering));
}

TEST(Enumeration, ClassCounts) {
  // counts and (gamma, rho) from an independent enumeration in tests/oracles/frozen_values.py
  EXPECT_EQ(enumerate_bicubic(6).size(), 1u);
  EXPECT_EQ(enumerate_bicubic(8).size(), 1u);
  EXPECT_EQ(enumerate_bicubic(10).size(), 2u);
  EXPECT_EQ(enumerate_bicubic(12).size(), 5u);
  EXPECT_THROW(enumerate_bicubic(14), PreconditionError);
  EXPECT_THROW(enumerate_bicubic(7), PreconditionError);
}

TEST(Enumeration, ClassesAreDistinctAndConnected) {
  for (int n = 6; n <= kMaxEnumeratedBicubic; n += 2) {
    auto graphs = enumerate_bicubic(n);
    std::set<std::string> seen;
    for (const auto& g : graphs) {
      EXPECT_TRUE(is_bicubic(g));
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(seen.insert(encode_graph6(g)).second);
    }
  }
  // the two order-10 classes differ in their number of 4-cycles
  auto fours = [](const Graph& g) {
    auto a = oracle::adjacency(g);
    int n = g.order(), c = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int common = 0;
        for (int w = 0; w < n; ++w) common += a[u][w] && a[v][w];
        c += common * (common - 1) / 2;
      }
    return c / 2;
  };
  auto ten = enumerate_bicubic(10);
  EXPECT_NE(fours(ten[0]), fours(ten[1]));
}
