#pragma once

#include <optional>
#include <string>
#include <vector>

#include "d2tk/plane_graph.hpp"

namespace d2tk {

struct ReducibleConfiguration {
  std::string id;
  int delta_case = 0;
  VertexId center = -1;
  // v_1..v_k in the labelling the recipe was written against.
  std::vector<VertexId> witnesses;
  Surgery recipe;
  // Which clause of the entry fired, in words.
  std::string clause;
};

struct ReducibilityCertificate {
  bool proper = false;
  bool shrinks = false;
  int headroom = 0;
  bool delta_ok = false;

  int d2 = 0;
  int delta_before = 0;
  int delta_after = 0;
  std::vector<Edge> inserted;
  std::vector<Edge> skipped;
  // Former neighbours of the center left at distance > 2.
  std::vector<Edge> far_pairs;

  bool passed() const { return proper && shrinks && headroom >= 0 && delta_ok; }
};

struct CatalogEntryInfo {
  std::string id;
  int delta_case;
  std::string statement;
};

std::vector<CatalogEntryInfo> catalog_entries(int delta_case);

// Every match, ordered by (entry, center).
std::vector<ReducibleConfiguration> detect(const PlaneGraph& g, int delta_case);
// The match detect() would list first.
std::optional<ReducibleConfiguration> detect_first(const PlaneGraph& g, int delta_case);
// Re-evaluates a single entry at a single vertex.
std::optional<ReducibleConfiguration> match_entry(const PlaneGraph& g, int delta_case,
                                                  const std::string& id, VertexId center);

ReducibilityCertificate certify(const PlaneGraph& g, const ReducibleConfiguration& c);

std::string format_configuration(const ReducibleConfiguration& c);

}  // namespace d2tk
