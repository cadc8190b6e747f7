#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "d2tk/plane_graph.hpp"

namespace d2tk {

struct FalsifyOptions {
  uint64_t seed = 1;
  int count = 100;
  int n = 60;
  double keep = 0.8;
  int threads = 0;  // 0 = hardware concurrency
  bool color = true;
  // Empty disables persisting failing graphs.
  std::string findings_dir;
};

struct GraphRecord {
  int id = 0;
  uint64_t seed = 0;
  std::string mode;
  int n = 0, m = 0, delta = 0;
  int detections = 0;
  int certified = 0;
  int cert_failed = 0;
  int delta_failed = 0;
  int negative = 0;
  int palette = 0;
  std::string method;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

struct RunReport {
  std::vector<GraphRecord> graphs;

  int passed() const;
  int violations() const;
  int exit_status() const { return violations() == 0 ? 0 : 1; }
};

// The graph falsify draws as number `index`.
PlaneGraph falsify_graph(const FalsifyOptions& opt, int index, std::string* mode = nullptr);

// Runs every check on one graph. Throws nothing; errors become violations.
GraphRecord check_graph(const PlaneGraph& g, bool color);

RunReport run_falsify(const FalsifyOptions& opt);
std::string format_report(const RunReport& r);

}  // namespace d2tk
