#pragma once

#include <map>
#include <string>
#include <vector>

#include "d2tk/plane_graph.hpp"

namespace d2tk {

struct ClassTag {
  int k = 0;  // degree
  int d = 0;  // incident 3-faces
  bool bad4 = false;
  bool bad5 = false;
  bool poor = false;

  std::string to_string() const;
};

// delta_case 0 means no case-specific tags.
ClassTag classify(int delta_case, int degree, int m3);

struct VertexProfile {
  VertexId v = -1;
  int degree = 0;
  int m3 = 0;
  int m4 = 0;
  std::map<int, int> mk;
  std::vector<Edge> boundary_edges;
  int t = 0;
  std::map<int, int> n_by_degree;
  int d2 = 0;
  ClassTag cls;

  int n(int degree) const {
    auto it = n_by_degree.find(degree);
    return it == n_by_degree.end() ? 0 : it->second;
  }
  bool is(int k, int d) const { return degree == k && m3 == d; }
};

// delta_case < 0 picks Δ(g) when it is 6, 7 or 8.
VertexProfile profile(const PlaneGraph& g, VertexId v, int delta_case = -1);
int d2_exact(const PlaneGraph& g, VertexId v);
int d2_bound(const PlaneGraph& g, VertexId v);

// True when both sides of uv are 3-faces.
bool in_two_triangles(const PlaneGraph& g, VertexId u, VertexId v);

struct EdgeFlag {
  bool special = false;
  bool support = false;
};

EdgeFlag edge_flags(const PlaneGraph& g, VertexId u, VertexId v, int delta_case);

// Plain undirected graph keyed by the ids of the source graph.
struct SimpleGraph {
  std::vector<VertexId> vertices;
  std::vector<std::vector<VertexId>> adj;  // indexed by id, sorted

  int size() const { return static_cast<int>(vertices.size()); }
  VertexId id_bound() const { return static_cast<VertexId>(adj.size()); }
};

SimpleGraph square(const PlaneGraph& g);
SimpleGraph as_simple(const PlaneGraph& g);

// Profiles of every vertex under one case, computed once.
class ProfileTable {
 public:
  ProfileTable(const PlaneGraph& g, int delta_case);

  const PlaneGraph& graph() const { return *g_; }
  int delta_case() const { return delta_case_; }
  const VertexProfile& operator[](VertexId v) const { return profiles_[v]; }

 private:
  const PlaneGraph* g_;
  int delta_case_;
  std::vector<VertexProfile> profiles_;
};

}  // namespace d2tk
