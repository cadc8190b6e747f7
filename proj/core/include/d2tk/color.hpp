#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "d2tk/analysis.hpp"
#include "d2tk/plane_graph.hpp"

namespace d2tk {

struct TraceStep {
  std::string id;  // catalog entry, empty for a diagnostic line
  VertexId removed = -1;
  std::vector<Edge> chords;
  std::string note;
};

struct ColoringCertificate {
  // Indexed by vertex id; -1 for ids not in the graph.
  std::vector<int> assignment;
  int palette_size = 0;
  bool valid = false;
  std::string method;  // constructive | exact | greedy
  std::vector<TraceStep> trace;
};

struct Validation {
  bool valid = true;
  std::optional<Edge> witness;
};

// Checks every pair at distance <= 2. Throws PartialAssignment when some
// vertex has no color.
Validation validate(const PlaneGraph& g, const std::vector<int>& assignment);

enum class GreedyOrder { Degeneracy, DescendingD2, Input };

ColoringCertificate greedy(const PlaneGraph& g, GreedyOrder order = GreedyOrder::Degeneracy);

// Proper coloring of an abstract graph with the fewest colors. Throws
// TooLarge above `bound` vertices (at most 64).
std::vector<int> exact_coloring(const SimpleGraph& h, int bound = 30);
std::pair<int, ColoringCertificate> exact_chi2(const PlaneGraph& g, int bound = 30);

// Reduce, recurse, extend. Throws PaletteExceeded when nothing reaches
// 2Δ+7 colors.
ColoringCertificate color_constructive(const PlaneGraph& g);

std::string format_trace_step(const TraceStep& s);

}  // namespace d2tk
