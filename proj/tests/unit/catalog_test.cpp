#include <gtest/gtest.h>

#include <map>
#include <set>

#include "d2tk/catalog.hpp"
#include "d2tk/error.hpp"
#include "d2tk/gen.hpp"
#include "test_graphs.hpp"

using namespace d2tk;

namespace {

std::map<std::string, int> count_ids(const std::vector<ReducibleConfiguration>& cs) {
  std::map<std::string, int> out;
  for (const auto& c : cs) ++out[c.id];
  return out;
}

}  // namespace

TEST(Catalog, EntryCounts) {
  EXPECT_EQ(catalog_entries(6).size(), 17u);
  EXPECT_EQ(catalog_entries(7).size(), 14u);
  EXPECT_EQ(catalog_entries(8).size(), 13u);
  EXPECT_THROW(catalog_entries(5), Error);
}

TEST(Detect, W6RimVertices) {
  auto hits = detect(fixture("W6"), 6);
  auto ids = count_ids(hits);
  EXPECT_EQ(ids["C6.2"], 6);
  std::set<VertexId> centers;
  for (const auto& c : hits)
    if (c.id == "C6.2") centers.insert(c.center);
  EXPECT_EQ(centers, (std::set<VertexId>{1, 2, 3, 4, 5, 6}));
}

TEST(Detect, W7RimVertices) {
  auto ids = count_ids(detect(fixture("W7"), 7));
  EXPECT_EQ(ids["C7.2"], 7);
}

TEST(Detect, UnsupportedDelta) {
  try {
    detect(fixture("octahedron"), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedDelta);
  }
}

TEST(Detect, FirstMatchesList) {
  PlaneGraph g = fixture("W6");
  auto all = detect(g, 6);
  auto first = detect_first(g, 6);
  ASSERT_TRUE(first);
  EXPECT_EQ(format_configuration(*first), format_configuration(all.front()));
}

TEST(Certify, W6Rim) {
  PlaneGraph g = fixture("W6");
  auto c = match_entry(g, 6, "C6.2", 1);
  ASSERT_TRUE(c);
  auto cert = certify(g, *c);
  EXPECT_TRUE(cert.proper);
  EXPECT_TRUE(cert.shrinks);
  EXPECT_TRUE(cert.delta_ok);
  EXPECT_EQ(cert.d2, 6);
  EXPECT_EQ(cert.headroom, 2 * 6 + 7 - 1 - 6);
  EXPECT_TRUE(cert.passed());
}

TEST(Certify, TamperedRecipeIsImproper) {
  // Deleting a vertex of C5 without closing the gap leaves its two
  // neighbours at distance 3.
  PlaneGraph c5 = fixture("C5");
  ReducibleConfiguration c;
  c.id = "manual";
  c.delta_case = 6;
  c.center = 0;
  c.recipe = {0, {}};
  auto cert = certify(c5, c);
  EXPECT_FALSE(cert.proper);
  EXPECT_EQ(cert.far_pairs.size(), 1u);

  auto nb = c5.rotation(0);
  c.recipe = {0, {{nb[0], nb[1]}}};
  EXPECT_TRUE(certify(c5, c).proper);
}

TEST(Detect, MatchEntryAgreesWithDetect) {
  for (const auto& cg : support::corpus(21, 30, 100, {6, 7, 8})) {
    int d = cg.graph.max_degree();
    for (const auto& c : detect(cg.graph, d)) {
      auto again = match_entry(cg.graph, d, c.id, c.center);
      ASSERT_TRUE(again) << c.id << " at " << c.center;
      EXPECT_EQ(format_configuration(*again), format_configuration(c));
    }
  }
}

TEST(Detect, FormatNamesEntryAndCenter) {
  auto c = match_entry(fixture("W6"), 6, "C6.2", 3);
  ASSERT_TRUE(c);
  std::string s = format_configuration(*c);
  EXPECT_NE(s.find("C6.2"), std::string::npos);
  EXPECT_NE(s.find("3"), std::string::npos);
}

TEST(Certify, EveryDetectionOnCorpus) {
  for (const auto& cg : support::corpus(5, 60, 140, {6, 7, 8})) {
    int d = cg.graph.max_degree();
    for (const auto& c : detect(cg.graph, d)) {
      auto cert = certify(cg.graph, c);
      EXPECT_TRUE(cert.passed()) << "graph " << cg.index << " " << format_configuration(c);
    }
  }
}
