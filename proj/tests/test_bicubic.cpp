#include <gtest/gtest.h>

#include "dompack/bicubic.hpp"
#include "dompack/generators.hpp"
#include "dompack/graph_io.hpp"

#include <map>
#include <set>

using namespace dompack;

TEST(Bicubic, Recognition) {
  EXPECT_TRUE(is_bicubic(decode_graph6("EFz_")));                // K33
  EXPECT_TRUE(is_bicubic(decode_graph6("Gr`HOk")));              // cube
  EXPECT_TRUE(is_bicubic(decode_graph6("MhEGHC@AI?_PC@_G_")));   // Heawood
  EXPECT_FALSE(is_bicubic(decode_graph6("IheA@GUAo")));          // Petersen, not bipartite
  EXPECT_FALSE(is_bicubic(decode_graph6("Cl")));                 // C4, not cubic
}

TEST(SidePacking, CertificateOnRandomGraphs) {
  for (Seed s = 0; s < 30; ++s) {
    auto g = gen_random_bicubic(16 + 2 * static_cast<int>(s % 5), s);
    auto lab = *bipartition(g);
    for (Side side : {Side::x, Side::y}) {
      const auto& part = side == Side::x ? lab.side_x : lab.side_y;
      auto p = side_packing(g, lab, side);
      EXPECT_TRUE(is_packing(g, p));
      EXPECT_TRUE(is_subset(p, part));
      EXPECT_GE(6 * p.size(), part.size());
    }
  }
}

TEST(SidePacking, Preconditions) {
  auto heawood = decode_graph6("MhEGHC@AI?_PC@_G_");
  auto lab = *bipartition(heawood);
  EXPECT_THROW(side_packing(heawood, lab, Side::x), PreconditionError);  // n < 16
  EXPECT_THROW(side_packing(decode_graph6("IheA@GUAo"), lab, Side::x), PreconditionError);
}

TEST(LayerDecomposition, InvariantsAndPackingSize) {
  for (Seed s = 0; s < 30; ++s) {
    auto g = gen_random_bicubic(16 + 2 * static_cast<int>(s % 5), 100 + s);
    auto lab = *bipartition(g);
    auto p = maximal_side_packing(g, side_packing(g, lab, Side::x), lab.side_x);
    auto d = layer_decompose(g, lab, p);
    EXPECT_EQ(set_union(d.p, d.r), lab.side_x);
    EXPECT_EQ(set_union(d.q, d.s), lab.side_y);
    EXPECT_EQ(d.q.size(), 3 * d.p.size());
    EXPECT_EQ(d.w.size(), 3 * d.t.size());
    EXPECT_LE(d.s.size(), 4 * d.t.size());
    auto pt = combined_packing(g, d);
    EXPECT_EQ(pt.size(), d.p.size() + d.t.size());
    EXPECT_LE(static_cast<int>(pt.size()), packing_number(g).value);
  }
}

TEST(LayerDecomposition, RejectsBadPackings) {
  auto g = gen_random_bicubic(16, 5);
  auto lab = *bipartition(g);
  EXPECT_THROW(layer_decompose(g, lab, VertexSet(16, {})), PreconditionError);
  VertexSet mixed(16, {lab.side_x[0], lab.side_y[0]});
  EXPECT_THROW(layer_decompose(g, lab, mixed), PreconditionError);
  VertexSet single(16, {lab.side_x[0]});
  try {
    layer_decompose(g, lab, single);
    FAIL() << "a single vertex is never a maximal side packing at n = 16";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("can be added"), std::string::npos);
  }
}

TEST(BicubicBounds, ExhaustiveSmallOrders) {
  // (gamma, rho) per isomorphism class, frozen from tests/oracles/frozen_values.py
  const std::map<int, std::multiset<std::pair<int, int>>> expected{
      {6, {{2, 1}}},
      {8, {{2, 2}}},
      {10, {{3, 2}, {3, 2}}},
      {12, {{4, 2}, {4, 2}, {4, 2}, {4, 2}, {4, 2}}},
  };
  for (const auto& [n, values] : expected) {
    std::multiset<std::pair<int, int>> got;
    for (const auto& g : enumerate_bicubic(n)) {
      got.insert({domination_number(g).value, packing_number(g).value});
      for (const auto& rec : check_bicubic_bounds(g)) EXPECT_TRUE(rec.satisfied) << rec.bound << " n=" << n;
    }
    EXPECT_EQ(got, values) << "n=" << n;
  }
}

TEST(BicubicBounds, RecordsPerOrder) {
  auto heawood = decode_graph6("MhEGHC@AI?_PC@_G_");
  std::set<std::string> names;
  for (const auto& r : check_bicubic_bounds(heawood)) {
    names.insert(r.bound);
    EXPECT_TRUE(r.satisfied) << r.bound;
  }
  // n = 14: 5n/14 applies, 7n/48 needs n >= 16, the 2rho check applies
  EXPECT_EQ(names, (std::set<std::string>{"bicubic-gamma-5n-14", "bicubic-ratio-120-49", "subcubic-2rho-plus-1", "bicubic-small"}));
  EXPECT_THROW(check_bicubic_bounds(decode_graph6("IheA@GUAo")), PreconditionError);
}

TEST(BicubicBounds, RandomLargerOrders) {
  for (Seed s = 0; s < 20; ++s) {
    auto g = gen_random_bicubic(16 + 2 * static_cast<int>(s % 5), 500 + s);
    for (const auto& rec : check_bicubic_bounds(g)) EXPECT_TRUE(rec.satisfied) << rec.bound;
  }
}
