#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace d2tk {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

// Normalized (smaller id first).
inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

struct FaceRecord {
  // Vertex walk; consecutive entries (cyclically) are the directed edges.
  std::vector<VertexId> boundary;
  int length() const { return static_cast<int>(boundary.size()); }
};

// One entry per vertex: id and its clockwise neighbour list.
using RotationSpec = std::vector<std::pair<VertexId, std::vector<VertexId>>>;

// Simple connected plane graph stored as a rotation system. Immutable.
//
// Face traversal: after the directed edge u->v the walk continues with
// v->w where w follows u in the clockwise rotation of v. Slot i of v is
// the face between rotation(v)[i] and rotation(v)[i+1].
class PlaneGraph {
 public:
  PlaneGraph() = default;

  const std::vector<VertexId>& vertices() const { return vertices_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return num_edges_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int max_degree() const { return max_degree_; }
  // One past the largest vertex id.
  VertexId id_bound() const { return static_cast<VertexId>(rotation_.size()); }

  bool has_vertex(VertexId v) const;
  const std::vector<VertexId>& rotation(VertexId v) const;
  int degree(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  // Index of u in rotation(v), or -1.
  int position(VertexId v, VertexId u) const;
  std::vector<Edge> edges() const;

  const std::vector<FaceRecord>& faces() const { return faces_; }
  // Face containing the directed edge u->v.
  int face_of(VertexId u, VertexId v) const;
  int slot_face(VertexId v, int slot) const;
  int face_length(int face) const { return faces_[face].length(); }

 private:
  friend PlaneGraph build_from_rotation(const RotationSpec& spec);

  int half_edge(VertexId u, int slot) const { return offset_[u] + slot; }

  std::vector<VertexId> vertices_;
  std::vector<std::vector<VertexId>> rotation_;
  std::vector<char> present_;
  // Per vertex: (neighbour, slot) sorted by neighbour.
  std::vector<std::vector<std::pair<VertexId, int>>> lookup_;
  std::vector<int> offset_;
  std::vector<int> half_edge_face_;
  std::vector<FaceRecord> faces_;
  int num_edges_ = 0;
  int max_degree_ = 0;
};

PlaneGraph build_from_rotation(const RotationSpec& spec);
RotationSpec rotation_spec(const PlaneGraph& g);

// The d(v) faces around v, slot by slot.
std::vector<FaceRecord> faces_incident(const PlaneGraph& g, VertexId v);

bool is_connected_without(const PlaneGraph& g, VertexId removed);

struct Surgery {
  VertexId remove = -1;
  std::vector<Edge> chords;
};

struct SurgeryResult {
  PlaneGraph graph;
  std::vector<Edge> inserted;
  // Chords that were already edges of the host graph, or repeated requests.
  std::vector<Edge> skipped;
};

bool chords_cross(const PlaneGraph& g, VertexId center, Edge a, Edge b);

SurgeryResult apply_surgery_report(const PlaneGraph& g, const Surgery& s);
PlaneGraph apply_surgery(const PlaneGraph& g, const Surgery& s);

}  // namespace d2tk
