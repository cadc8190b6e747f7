#include <gtest/gtest.h>

#include <numeric>

#include "d2tk/analysis.hpp"
#include "d2tk/error.hpp"
#include "d2tk/gen.hpp"
#include "test_graphs.hpp"

using namespace d2tk;

TEST(Profile, W6) {
  PlaneGraph g = fixture("W6");
  auto rim = profile(g, 1, 6);
  EXPECT_EQ(rim.degree, 3);
  EXPECT_EQ(rim.m3, 2);
  EXPECT_EQ(rim.m4, 0);
  EXPECT_EQ(rim.t, 2);
  EXPECT_EQ(rim.d2, 6);
  auto hub = profile(g, 0, 6);
  EXPECT_EQ(hub.cls.k, 6);
  EXPECT_EQ(hub.cls.d, 6);
  EXPECT_EQ(hub.cls.to_string(), "6(6)");
}

TEST(Profile, C5) {
  auto p = profile(fixture("C5"), 0);
  EXPECT_EQ(p.degree, 2);
  EXPECT_EQ(p.m3, 0);
  EXPECT_EQ(p.t, 0);
  EXPECT_EQ(p.d2, 4);
  EXPECT_EQ(p.mk.at(5), 2);
}

TEST(Profile, UnknownVertex) {
  EXPECT_THROW(profile(fixture("K4"), 9), Error);
  EXPECT_THROW(d2_exact(fixture("K4"), -1), Error);
}

TEST(Profile, ClassTags) {
  EXPECT_TRUE(classify(6, 4, 2).bad4);
  EXPECT_FALSE(classify(6, 4, 3).bad4);
  EXPECT_TRUE(classify(7, 4, 3).bad4);
  EXPECT_FALSE(classify(8, 4, 1).bad4);
  EXPECT_TRUE(classify(8, 5, 4).bad5);
  EXPECT_TRUE(classify(7, 5, 5).poor);
  EXPECT_TRUE(classify(7, 4, 0).poor);
  EXPECT_FALSE(classify(6, 4, 0).poor);
}

TEST(D2, Examples) {
  EXPECT_EQ(d2_exact(fixture("C5"), 0), 4);
  EXPECT_EQ(d2_exact(fixture("W6"), 0), 6);
  EXPECT_EQ(d2_exact(fixture("W6"), 1), 6);
  EXPECT_EQ(d2_bound(fixture("C5"), 0), 4);
  EXPECT_EQ(d2_bound(fixture("W6"), 1), 6);
}

TEST(D2, BoundOverSubtractsOnK4) {
  PlaneGraph k4 = fixture("K4");
  EXPECT_EQ(d2_bound(k4, 0), 0);
  EXPECT_EQ(d2_exact(k4, 0), 3);
}

TEST(Square, Examples) {
  auto c5 = square(fixture("C5"));
  for (VertexId v : c5.vertices) EXPECT_EQ(c5.adj[v].size(), 4u);
  auto k4 = square(fixture("K4"));
  for (VertexId v : k4.vertices) EXPECT_EQ(k4.adj[v].size(), 3u);

  PlaneGraph c6 = fixture("C6");
  auto sq = square(c6);
  for (VertexId v : sq.vertices) {
    ASSERT_EQ(sq.adj[v].size(), 4u);
    // the antipode is the one vertex at distance 3
    for (VertexId u : sq.adj[v]) {
      bool near = c6.adjacent(u, v);
      for (VertexId w : c6.rotation(v)) near = near || c6.adjacent(w, u);
      EXPECT_TRUE(near);
    }
  }
}

TEST(EdgeFlags, Examples) {
  PlaneGraph f1 = fixture("figure1");
  bool any_special = false;
  for (auto [a, b] : f1.edges()) any_special = any_special || edge_flags(f1, a, b, 6).special;
  EXPECT_TRUE(any_special);
  EXPECT_TRUE(edge_flags(f1, 0, 1, 6).special);

  PlaneGraph w6 = fixture("W6");
  EXPECT_FALSE(edge_flags(w6, 0, 1, 7).support);

  PlaneGraph k4 = fixture("K4");
  for (auto [a, b] : k4.edges())
    for (int c : {6, 7, 8}) EXPECT_FALSE(edge_flags(k4, a, b, c).special);

  try {
    edge_flags(w6, 1, 3, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnEdge);
  }
}

TEST(EdgeFlags, SpecialImpliesTwoTriangles) {
  for (const auto& c : support::corpus(11, 40, 30, {6})) {
    for (auto [a, b] : c.graph.edges())
      if (edge_flags(c.graph, a, b, 6).special) EXPECT_TRUE(in_two_triangles(c.graph, a, b));
  }
}

TEST(EdgeFlags, SupportOnW7) {
  // The hub of W7 is a 7-vertex but its neighbours are 3-vertices.
  PlaneGraph w7 = fixture("W7");
  EXPECT_FALSE(edge_flags(w7, 0, 1, 7).support);
}

TEST(Invariants, ProfilesOverCorpus) {
  for (const auto& c : support::corpus(3, 60, 150)) {
    const PlaneGraph& g = c.graph;
    auto sq = square(g);
    for (VertexId v : g.vertices()) {
      auto p = profile(g, v);
      int slots = 0;
      for (auto [len, cnt] : p.mk) slots += cnt;
      EXPECT_EQ(slots, p.degree);
      EXPECT_LE(p.t, static_cast<int>(p.boundary_edges.size()));
      EXPECT_LE(static_cast<int>(p.boundary_edges.size()), p.degree);
      int sum = 0;
      for (VertexId u : g.rotation(v)) sum += g.degree(u);
      EXPECT_LE(p.d2, sum);
      EXPECT_EQ(static_cast<int>(sq.adj[v].size()), p.d2);
      if (p.m3 == 0 && p.m4 == 0 && p.t == 0) EXPECT_GE(d2_bound(g, v), p.d2);
      EXPECT_EQ(classify(g.max_degree(), p.degree, p.m3).to_string(),
                profile(g, v, g.max_degree()).cls.to_string());
    }
  }
}
