#include <gtest/gtest.h>

#include "d2tk/error.hpp"
#include "d2tk/gen.hpp"
#include "d2tk/rotg.hpp"

using namespace d2tk;

TEST(SplitMix64, ReferenceOutputs) {
  // First outputs for seed 0 of the reference splitmix64.
  SplitMix64 r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(r.next(), 0x06C45D188009454FULL);
}

TEST(Triangulation, SmallestIsK4) {
  GenSpec s;
  s.n_target = 4;
  PlaneGraph g = random_triangulation(s);
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 6);
  for (VertexId v : g.vertices()) EXPECT_EQ(g.degree(v), 3);
}

TEST(Triangulation, DeterministicBytes) {
  GenSpec s;
  s.seed = 99;
  s.n_target = 80;
  EXPECT_EQ(to_rotg(random_triangulation(s)), to_rotg(random_triangulation(s)));
  GenSpec t = s;
  t.seed = 100;
  EXPECT_NE(to_rotg(random_triangulation(s)), to_rotg(random_triangulation(t)));
}

TEST(Triangulation, Maximal) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    GenSpec s;
    s.seed = seed;
    s.n_target = 30 + static_cast<int>(seed);
    PlaneGraph g = random_triangulation(s);
    EXPECT_EQ(g.num_edges(), 3 * g.num_vertices() - 6);
    for (const auto& f : g.faces()) EXPECT_EQ(f.length(), 3);
  }
}

TEST(Triangulation, BadSpec) {
  GenSpec s;
  s.n_target = 3;
  EXPECT_THROW(random_triangulation(s), Error);
}

TEST(Subsample, KeepAllIsIdentity) {
  GenSpec s;
  s.seed = 5;
  s.n_target = 40;
  PlaneGraph g = random_triangulation(s);
  s.edge_keep_probability = 1.0;
  EXPECT_EQ(to_rotg(subsample(g, s)), to_rotg(g));
}

TEST(Subsample, KeepNothingLeavesASpanningTree) {
  GenSpec s;
  s.seed = 5;
  s.n_target = 40;
  PlaneGraph g = random_triangulation(s);
  s.edge_keep_probability = 0.0;
  PlaneGraph t = subsample(g, s);
  EXPECT_EQ(t.num_vertices(), g.num_vertices());
  EXPECT_EQ(t.num_edges(), t.num_vertices() - 1);
  EXPECT_EQ(t.num_faces(), 1);
}

TEST(Generate, DeltaFilter) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    GenSpec s;
    s.seed = seed;
    s.n_target = 50;
    s.mode = seed % 2 ? GenMode::Subsampled : GenMode::Triangulation;
    s.edge_keep_probability = 0.75;
    s.delta_filter = {6, 7, 8};
    int d = generate(s).max_degree();
    EXPECT_GE(d, 6);
    EXPECT_LE(d, 8);
  }
}

TEST(Generate, RoundTripsThroughRotg) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    GenSpec s;
    s.seed = seed;
    s.n_target = 60;
    s.mode = GenMode::Subsampled;
    s.edge_keep_probability = 0.6;
    std::string text = to_rotg(generate(s));
    EXPECT_EQ(to_rotg(parse_rotg_string(text)), text);
  }
}

TEST(Fixture, Shapes) {
  EXPECT_EQ(fixture("K4").num_edges(), 6);
  EXPECT_EQ(fixture("W6").num_edges(), 12);
  EXPECT_EQ(fixture("W7").max_degree(), 7);
  EXPECT_EQ(fixture("octahedron").num_edges(), 12);
  EXPECT_EQ(fixture("icosahedron").num_edges(), 30);
  EXPECT_EQ(fixture("C5").num_edges(), 5);
  EXPECT_EQ(fixture("grid_3x4").num_vertices(), 12);
  EXPECT_EQ(fixture("grid_3x4").num_edges(), 17);
  for (const auto& name : fixture_names()) EXPECT_NO_THROW(fixture(name)) << name;
}

TEST(Fixture, Unknown) {
  try {
    fixture("dodecahedron");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFixture);
  }
}
