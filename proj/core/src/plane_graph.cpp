#include "d2tk/plane_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "d2tk/error.hpp"

namespace d2tk {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

}  // namespace

bool PlaneGraph::has_vertex(VertexId v) const {
  return v >= 0 && v < id_bound() && present_[v];
}

const std::vector<VertexId>& PlaneGraph::rotation(VertexId v) const {
  if (!has_vertex(v)) throw Error(ErrorCode::UnknownVertex, vname(v));
  return rotation_[v];
}

int PlaneGraph::degree(VertexId v) const {
  return static_cast<int>(rotation(v).size());
}

int PlaneGraph::position(VertexId v, VertexId u) const {
  if (!has_vertex(v)) throw Error(ErrorCode::UnknownVertex, vname(v));
  const auto& lk = lookup_[v];
  auto it = std::lower_bound(lk.begin(), lk.end(), std::make_pair(u, -1));
  if (it == lk.end() || it->first != u) return -1;
  return it->second;
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return position(u, v) >= 0;
}

std::vector<Edge> PlaneGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId u : vertices_)
    for (VertexId w : rotation_[u])
      if (u < w) out.emplace_back(u, w);
  std::sort(out.begin(), out.end());
  return out;
}

int PlaneGraph::face_of(VertexId u, VertexId v) const {
  int p = position(u, v);
  if (p < 0) throw Error(ErrorCode::NotAnEdge, vname(u) + "-" + vname(v));
  return half_edge_face_[half_edge(u, p)];
}

int PlaneGraph::slot_face(VertexId v, int slot) const {
  int k = degree(v);
  if (k == 0) return 0;
  return half_edge_face_[half_edge(v, (slot + 1) % k)];
}

PlaneGraph build_from_rotation(const RotationSpec& spec) {
  PlaneGraph g;
  if (spec.empty()) throw Error(ErrorCode::NotConnected, "empty graph");

  VertexId bound = 0;
  for (const auto& [v, rot] : spec) {
    if (v < 0) throw Error(ErrorCode::UnknownVertex, vname(v));
    bound = std::max(bound, v + 1);
  }
  g.rotation_.assign(bound, {});
  g.present_.assign(bound, 0);
  for (const auto& [v, rot] : spec) {
    if (g.present_[v]) throw Error(ErrorCode::Duplicate, "vertex " + vname(v) + " listed twice");
    g.present_[v] = 1;
    g.rotation_[v] = rot;
    g.vertices_.push_back(v);
  }
  std::sort(g.vertices_.begin(), g.vertices_.end());

  g.lookup_.assign(bound, {});
  long degree_sum = 0;
  for (VertexId v : g.vertices_) {
    const auto& rot = g.rotation_[v];
    auto& lk = g.lookup_[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      VertexId u = rot[i];
      if (u == v) throw Error(ErrorCode::SelfLoop, "at " + vname(v));
      if (u < 0 || u >= bound || !g.present_[u])
        throw Error(ErrorCode::UnknownVertex, vname(u) + " in rotation of " + vname(v));
      lk.emplace_back(u, i);
    }
    std::sort(lk.begin(), lk.end());
    for (size_t i = 1; i < lk.size(); ++i)
      if (lk[i].first == lk[i - 1].first)
        throw Error(ErrorCode::Duplicate, "edge " + vname(v) + "-" + vname(lk[i].first));
    degree_sum += static_cast<long>(rot.size());
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(rot.size()));
  }
  for (VertexId v : g.vertices_)
    for (VertexId u : g.rotation_[v])
      if (g.position(u, v) < 0)
        throw Error(ErrorCode::AsymmetricAdjacency,
                    vname(v) + " lists " + vname(u) + " but not conversely");
  g.num_edges_ = static_cast<int>(degree_sum / 2);

  {
    std::vector<char> seen(bound, 0);
    std::vector<VertexId> stack{g.vertices_.front()};
    seen[stack.back()] = 1;
    int reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : g.rotation_[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != g.num_vertices())
      throw Error(ErrorCode::NotConnected,
                  std::to_string(reached) + " of " + std::to_string(g.num_vertices()) +
                      " vertices reachable");
  }

  g.offset_.assign(bound + 1, 0);
  for (VertexId v = 0; v < bound; ++v)
    g.offset_[v + 1] = g.offset_[v] + static_cast<int>(g.rotation_[v].size());
  g.half_edge_face_.assign(g.offset_[bound], -1);

  for (VertexId v : g.vertices_) {
    for (int s = 0; s < static_cast<int>(g.rotation_[v].size()); ++s) {
      if (g.half_edge_face_[g.half_edge(v, s)] >= 0) continue;
      int face = static_cast<int>(g.faces_.size());
      FaceRecord rec;
      VertexId u = v;
      int slot = s;
      while (g.half_edge_face_[g.half_edge(u, slot)] < 0) {
        g.half_edge_face_[g.half_edge(u, slot)] = face;
        rec.boundary.push_back(u);
        VertexId w = g.rotation_[u][slot];
        int back = g.position(w, u);
        slot = (back + 1) % static_cast<int>(g.rotation_[w].size());
        u = w;
      }
      if (u != v || slot != s)
        throw Error(ErrorCode::NotSphere, "face walk from " + vname(v) + " does not close");
      g.faces_.push_back(std::move(rec));
    }
  }
  if (g.num_vertices() == 1) g.faces_.push_back(FaceRecord{});

  long length_sum = 0;
  for (const auto& f : g.faces_) length_sum += f.length();
  if (length_sum != 2L * g.num_edges_)
    throw Error(ErrorCode::NotSphere, "face lengths do not sum to 2m");
  int euler = g.num_vertices() - g.num_edges_ + g.num_faces();
  if (euler != 2)
    throw Error(ErrorCode::NotSphere, "n - m + f = " + std::to_string(euler));
  return g;
}

RotationSpec rotation_spec(const PlaneGraph& g) {
  RotationSpec spec;
  spec.reserve(g.num_vertices());
  for (VertexId v : g.vertices()) spec.emplace_back(v, g.rotation(v));
  return spec;
}

std::vector<FaceRecord> faces_incident(const PlaneGraph& g, VertexId v) {
  int k = g.degree(v);
  std::vector<FaceRecord> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.push_back(g.faces()[g.slot_face(v, i)]);
  return out;
}

bool is_connected_without(const PlaneGraph& g, VertexId removed) {
  if (g.num_vertices() <= 1) return false;
  std::vector<char> seen(g.id_bound(), 0);
  seen[removed] = 1;
  VertexId start = g.vertices().front() == removed ? g.vertices()[1] : g.vertices().front();
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.rotation(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == g.num_vertices() - 1;
}

bool chords_cross(const PlaneGraph& g, VertexId center, Edge a, Edge b) {
  int k = g.degree(center);
  int a1 = g.position(center, a.first), a2 = g.position(center, a.second);
  int b1 = g.position(center, b.first), b2 = g.position(center, b.second);
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  auto inside = [&](int x) {
    // strictly between a1 and a2 going clockwise
    int span = ((a2 - a1) % k + k) % k;
    int off = ((x - a1) % k + k) % k;
    return off > 0 && off < span;
  };
  return inside(b1) != inside(b2);
}

SurgeryResult apply_surgery_report(const PlaneGraph& g, const Surgery& s) {
  VertexId v = s.remove;
  if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, vname(v));
  if (g.num_vertices() == 1) throw Error(ErrorCode::BadSurgery, "cannot delete the only vertex");
  const auto& nbrs = g.rotation(v);
  int k = static_cast<int>(nbrs.size());

  SurgeryResult res;
  std::set<Edge> requested;
  for (auto [a, b] : s.chords) {
    if (a == b) throw Error(ErrorCode::BadSurgery, "chord with equal endpoints " + vname(a));
    if (g.position(v, a) < 0 || g.position(v, b) < 0)
      throw Error(ErrorCode::BadSurgery,
                  "chord " + vname(a) + "-" + vname(b) + " leaves N(" + vname(v) + ")");
    Edge e = make_edge(a, b);
    if (!requested.insert(e).second || g.adjacent(a, b)) {
      res.skipped.push_back(e);
      continue;
    }
    res.inserted.push_back(e);
  }
  for (size_t i = 0; i < res.inserted.size(); ++i)
    for (size_t j = i + 1; j < res.inserted.size(); ++j)
      if (chords_cross(g, v, res.inserted[i], res.inserted[j]))
        throw Error(ErrorCode::CrossingChords,
                    vname(res.inserted[i].first) + "-" + vname(res.inserted[i].second) + " x " +
                        vname(res.inserted[j].first) + "-" + vname(res.inserted[j].second));
  std::vector<std::vector<VertexId>> targets(g.id_bound());
  for (auto [a, b] : res.inserted) {
    targets[a].push_back(b);
    targets[b].push_back(a);
  }
  RotationSpec spec;
  spec.reserve(g.num_vertices() - 1);
  for (VertexId u : g.vertices()) {
    if (u == v) continue;
    std::vector<VertexId> rot;
    for (VertexId w : g.rotation(u)) {
      if (w != v) {
        rot.push_back(w);
        continue;
      }
      // New chords at u take v's place, clockwise from u around the hole.
      int pu = g.position(v, u);
      auto& t = targets[u];
      std::sort(t.begin(), t.end(), [&](VertexId x, VertexId y) {
        return (g.position(v, x) - pu + k) % k < (g.position(v, y) - pu + k) % k;
      });
      rot.insert(rot.end(), t.begin(), t.end());
    }
    spec.emplace_back(u, std::move(rot));
  }
  try {
    res.graph = build_from_rotation(spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotConnected) throw;
    throw Error(ErrorCode::Disconnects, "deleting " + vname(v));
  }
  return res;
}

PlaneGraph apply_surgery(const PlaneGraph& g, const Surgery& s) {
  return apply_surgery_report(g, s).graph;
}

}  // namespace d2tk
