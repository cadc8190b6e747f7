#include "d2tk/analysis.hpp"

#include <algorithm>
#include <set>

#include "d2tk/error.hpp"

namespace d2tk {

namespace {

int resolve_case(const PlaneGraph& g, int delta_case) {
  if (delta_case >= 0) return delta_case;
  int d = g.max_degree();
  return (d >= 6 && d <= 8) ? d : 0;
}

// Vertices at distance 1 or 2 from v. `stamp` must be sized to id_bound and
// hold values different from `mark`.
int ball2(const PlaneGraph& g, VertexId v, std::vector<int>& stamp, int mark,
          std::vector<VertexId>* out) {
  int count = 0;
  stamp[v] = mark;
  for (VertexId u : g.rotation(v)) {
    if (stamp[u] != mark) {
      stamp[u] = mark;
      ++count;
      if (out) out->push_back(u);
    }
  }
  for (VertexId u : g.rotation(v))
    for (VertexId w : g.rotation(u))
      if (stamp[w] != mark) {
        stamp[w] = mark;
        ++count;
        if (out) out->push_back(w);
      }
  return count;
}

VertexProfile build_profile(const PlaneGraph& g, VertexId v, int delta_case,
                            std::vector<int>& stamp, int mark) {
  VertexProfile p;
  p.v = v;
  const auto& rot = g.rotation(v);
  int k = static_cast<int>(rot.size());
  p.degree = k;
  for (int i = 0; i < k; ++i) ++p.mk[g.face_length(g.slot_face(v, i))];
  p.m3 = p.mk.count(3) ? p.mk[3] : 0;
  p.m4 = p.mk.count(4) ? p.mk[4] : 0;
  std::set<Edge> be;
  for (int i = 0; i < k; ++i) {
    VertexId a = rot[i], b = rot[(i + 1) % k];
    if (a != b && g.adjacent(a, b)) be.insert(make_edge(a, b));
  }
  p.boundary_edges.assign(be.begin(), be.end());
  for (auto [a, b] : p.boundary_edges)
    if (in_two_triangles(g, a, b)) ++p.t;
  for (VertexId u : rot) ++p.n_by_degree[g.degree(u)];
  p.d2 = ball2(g, v, stamp, mark, nullptr);
  p.cls = classify(delta_case, p.degree, p.m3);
  return p;
}

bool triangle_touches_big_face(const PlaneGraph& g, int face) {
  const auto& b = g.faces()[face].boundary;
  for (size_t i = 0; i < b.size(); ++i) {
    VertexId x = b[i], y = b[(i + 1) % b.size()];
    if (g.face_length(g.face_of(y, x)) >= 4) return true;
  }
  return false;
}

bool is_55(const PlaneGraph& g, VertexId x) {
  if (g.degree(x) != 5) return false;
  for (int i = 0; i < 5; ++i)
    if (g.face_length(g.slot_face(x, i)) != 3) return false;
  return true;
}

}  // namespace

std::string ClassTag::to_string() const {
  std::string s = std::to_string(k) + "(" + std::to_string(d) + ")";
  if (bad4) s += ",bad4";
  if (bad5) s += ",bad5";
  if (poor) s += ",poor";
  return s;
}

ClassTag classify(int delta_case, int degree, int m3) {
  ClassTag c;
  c.k = degree;
  c.d = m3;
  if (delta_case == 6) c.bad4 = degree == 4 && (m3 == 1 || m3 == 2);
  if (delta_case == 7) c.bad4 = degree == 4 && m3 >= 1 && m3 <= 3;
  if (delta_case >= 6 && delta_case <= 8) c.bad5 = degree == 5 && m3 >= 4;
  if (delta_case == 7) c.poor = degree == 4 || (degree == 5 && m3 == 5);
  return c;
}

VertexProfile profile(const PlaneGraph& g, VertexId v, int delta_case) {
  if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  std::vector<int> stamp(g.id_bound(), 0);
  return build_profile(g, v, resolve_case(g, delta_case), stamp, 1);
}

int d2_exact(const PlaneGraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  std::vector<int> stamp(g.id_bound(), 0);
  return ball2(g, v, stamp, 1, nullptr);
}

int d2_bound(const PlaneGraph& g, VertexId v) {
  VertexProfile p = profile(g, v);
  int sum = 0;
  for (VertexId u : g.rotation(v)) sum += g.degree(u);
  return sum - 2 * p.m3 - p.m4 - p.t;
}

bool in_two_triangles(const PlaneGraph& g, VertexId u, VertexId v) {
  int f1 = g.face_of(u, v), f2 = g.face_of(v, u);
  return f1 != f2 && g.face_length(f1) == 3 && g.face_length(f2) == 3;
}

EdgeFlag edge_flags(const PlaneGraph& g, VertexId u, VertexId v, int delta_case) {
  if (!g.has_vertex(u)) throw Error(ErrorCode::UnknownVertex, std::to_string(u));
  if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  if (!g.adjacent(u, v))
    throw Error(ErrorCode::NotAnEdge, std::to_string(u) + "-" + std::to_string(v));
  EdgeFlag f;
  if (!in_two_triangles(g, u, v)) return f;
  if (is_55(g, u) || is_55(g, v))
    f.special = triangle_touches_big_face(g, g.face_of(u, v)) &&
                triangle_touches_big_face(g, g.face_of(v, u));
  int du = g.degree(u), dv = g.degree(v);
  auto supports = [&](int high, int low) {
    if (delta_case == 7) return high == 7 && low == 4;
    if (delta_case == 8) return (high == 7 && low <= 5) || (high == 8 && low <= 4);
    return false;
  };
  f.support = supports(du, dv) || supports(dv, du);
  return f;
}

SimpleGraph square(const PlaneGraph& g) {
  SimpleGraph s;
  s.vertices = g.vertices();
  s.adj.assign(g.id_bound(), {});
  std::vector<int> stamp(g.id_bound(), 0);
  int mark = 0;
  for (VertexId v : g.vertices()) {
    auto& out = s.adj[v];
    ball2(g, v, stamp, ++mark, &out);
    std::sort(out.begin(), out.end());
  }
  return s;
}

SimpleGraph as_simple(const PlaneGraph& g) {
  SimpleGraph s;
  s.vertices = g.vertices();
  s.adj.assign(g.id_bound(), {});
  for (VertexId v : g.vertices()) {
    s.adj[v] = g.rotation(v);
    std::sort(s.adj[v].begin(), s.adj[v].end());
  }
  return s;
}

ProfileTable::ProfileTable(const PlaneGraph& g, int delta_case)
    : g_(&g), delta_case_(resolve_case(g, delta_case)), profiles_(g.id_bound()) {
  std::vector<int> stamp(g.id_bound(), 0);
  int mark = 0;
  for (VertexId v : g.vertices())
    profiles_[v] = build_profile(g, v, delta_case_, stamp, ++mark);
}

}  // namespace d2tk
