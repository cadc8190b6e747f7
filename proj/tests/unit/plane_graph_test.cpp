#include <gtest/gtest.h>

#include <map>

#include "d2tk/error.hpp"
#include "d2tk/gen.hpp"
#include "d2tk/plane_graph.hpp"
#include "test_graphs.hpp"

using namespace d2tk;

namespace {

std::map<int, int> face_lengths(const PlaneGraph& g) {
  std::map<int, int> out;
  for (const auto& f : g.faces()) ++out[f.length()];
  return out;
}

ErrorCode code_of(const RotationSpec& spec) {
  try {
    build_from_rotation(spec);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::BadSpec;
}

}  // namespace

TEST(PlaneGraph, K4Counts) {
  PlaneGraph g = fixture("K4");
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 6);
  EXPECT_EQ(g.num_faces(), 4);
  EXPECT_EQ(g.max_degree(), 3);
}

TEST(PlaneGraph, W6Faces) {
  PlaneGraph g = fixture("W6");
  EXPECT_EQ(g.num_vertices(), 7);
  EXPECT_EQ(g.num_edges(), 12);
  EXPECT_EQ(g.num_faces(), 7);
  EXPECT_EQ(face_lengths(g), (std::map<int, int>{{3, 6}, {6, 1}}));
}

TEST(PlaneGraph, ConstructionErrors) {
  EXPECT_EQ(code_of({{0, {1, 2}}, {1, {2}}, {2, {0, 1}}}), ErrorCode::AsymmetricAdjacency);
  EXPECT_EQ(code_of({{0, {0, 1}}, {1, {0}}}), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of({{0, {1, 1}}, {1, {0, 0}}}), ErrorCode::Duplicate);
  EXPECT_EQ(code_of({{0, {1}}, {1, {0}}, {2, {3}}, {3, {2}}}), ErrorCode::NotConnected);
  EXPECT_EQ(code_of({{0, {1}}, {1, {0, 5}}}), ErrorCode::UnknownVertex);
}

TEST(PlaneGraph, ReversedRotationIsNotSpherical) {
  auto spec = rotation_spec(fixture("K4"));
  std::reverse(spec[0].second.begin(), spec[0].second.end());
  EXPECT_EQ(code_of(spec), ErrorCode::NotSphere);
}

TEST(PlaneGraph, FacesIncident) {
  PlaneGraph w6 = fixture("W6");
  auto hub = faces_incident(w6, 0);
  ASSERT_EQ(hub.size(), 6u);
  for (const auto& f : hub) EXPECT_EQ(f.length(), 3);

  std::multiset<int> rim;
  for (const auto& f : faces_incident(w6, 1)) rim.insert(f.length());
  EXPECT_EQ(rim, (std::multiset<int>{3, 3, 6}));

  auto c5 = faces_incident(fixture("C5"), 2);
  ASSERT_EQ(c5.size(), 2u);
  EXPECT_EQ(c5[0].length(), 5);
  EXPECT_EQ(c5[1].length(), 5);

  EXPECT_THROW(faces_incident(w6, 42), Error);
}

TEST(PlaneGraph, BridgeFacesRepeatVertices) {
  PlaneGraph p = support::path(3);
  ASSERT_EQ(p.num_faces(), 1);
  EXPECT_EQ(p.faces()[0].length(), 4);
  auto at_middle = faces_incident(p, 1);
  EXPECT_EQ(at_middle.size(), 2u);
}

TEST(PlaneGraph, SingleVertex) {
  PlaneGraph g = build_from_rotation({{0, {}}});
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.num_faces(), 1);
}

TEST(Surgery, DeleteHub) {
  PlaneGraph g = apply_surgery(fixture("W6"), {0, {}});
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 6);
  EXPECT_EQ(g.num_faces(), 2);
}

TEST(Surgery, ChordClosesC4) {
  PlaneGraph c4 = fixture("C4");
  auto nb = c4.rotation(0);
  PlaneGraph g = apply_surgery(c4, {0, {{nb[0], nb[1]}}});
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(face_lengths(g), (std::map<int, int>{{3, 2}}));
}

TEST(Surgery, PlainDeletionOfC4LeavesPath) {
  PlaneGraph g = apply_surgery(fixture("C4"), {0, {}});
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.num_faces(), 1);
}

TEST(Surgery, ExistingChordIsSkipped) {
  PlaneGraph w6 = fixture("W6");
  auto nb = w6.rotation(1);  // hub and two rim vertices
  VertexId a = nb[0], b = nb[1];
  ASSERT_TRUE(w6.adjacent(a, b));
  auto res = apply_surgery_report(w6, {1, {{a, b}}});
  EXPECT_TRUE(res.inserted.empty());
  ASSERT_EQ(res.skipped.size(), 1u);
  EXPECT_EQ(res.skipped[0], make_edge(a, b));
  EXPECT_EQ(res.graph.num_edges(), 9);
}

TEST(Surgery, FanFromOneNeighbourTriangulatesTheHole) {
  PlaneGraph w6 = fixture("W6");
  auto nb = w6.rotation(0);
  Surgery s{0, {{nb[0], nb[2]}, {nb[0], nb[3]}, {nb[0], nb[4]}}};
  PlaneGraph g = apply_surgery(w6, s);
  EXPECT_EQ(g.num_edges(), 9);
  EXPECT_EQ(face_lengths(g), (std::map<int, int>{{3, 4}, {6, 1}}));
  EXPECT_EQ(g.degree(nb[0]), 5);
}

TEST(Surgery, ChordOrderHoldsForEveryFanOnAWheel) {
  for (int k = 4; k <= 9; ++k) {
    PlaneGraph w = fixture("W" + std::to_string(k));
    auto nb = w.rotation(0);
    for (int p = 0; p < k; ++p) {
      Surgery s{0, {}};
      for (int q = 0; q < k; ++q)
        if (q != p && q != (p + 1) % k && q != (p + k - 1) % k) s.chords.push_back({nb[p], nb[q]});
      PlaneGraph g = apply_surgery(w, s);
      EXPECT_EQ(face_lengths(g)[3], k - 2) << "W" << k << " fan from slot " << p;
    }
  }
}

TEST(Surgery, Errors) {
  PlaneGraph w6 = fixture("W6");
  auto nb = w6.rotation(0);
  try {
    apply_surgery(w6, {0, {{nb[0], nb[3]}, {nb[1], nb[4]}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CrossingChords);
  }
  try {
    apply_surgery(support::path(3), {1, {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnects);
  }
  try {
    apply_surgery(w6, {1, {{nb[3], nb[4]}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadSurgery);
  }
}

TEST(Surgery, ReconnectingChordAtACutVertex) {
  PlaneGraph g = apply_surgery(support::path(3), {1, {{0, 2}}});
  EXPECT_EQ(g.num_edges(), 1);
}

TEST(PlaneGraph, EulerAndHandshakeOnGeneratedGraphs) {
  for (const auto& c : support::corpus(7, 60, 120)) {
    const PlaneGraph& g = c.graph;
    int total = 0;
    for (const auto& f : g.faces()) total += f.length();
    EXPECT_EQ(total, 2 * g.num_edges());
    EXPECT_EQ(g.num_vertices() - g.num_edges() + g.num_faces(), 2);
  }
}

TEST(PlaneGraph, FaceDerivationIsDeterministic) {
  PlaneGraph a = fixture("icosahedron");
  PlaneGraph b = build_from_rotation(rotation_spec(a));
  ASSERT_EQ(a.num_faces(), b.num_faces());
  for (int i = 0; i < a.num_faces(); ++i) EXPECT_EQ(a.faces()[i].boundary, b.faces()[i].boundary);
}
