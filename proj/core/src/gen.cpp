#include "d2tk/gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <regex>

#include "d2tk/error.hpp"

namespace d2tk {

uint64_t SplitMix64::next() {
  uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  SplitMix64 r(seed ^ (salt * 0xD1B54A32D192ED03ULL));
  r.next();
  return r.next();
}

GenMode parse_gen_mode(const std::string& name) {
  if (name == "triangulation") return GenMode::Triangulation;
  if (name == "subsampled") return GenMode::Subsampled;
  if (name == "fixture") return GenMode::Fixture;
  throw Error(ErrorCode::BadSpec, "unknown mode " + name);
}

namespace {

using Rot = std::vector<std::vector<VertexId>>;

void insert_after(std::vector<VertexId>& rot, VertexId after, VertexId x) {
  auto it = std::find(rot.begin(), rot.end(), after);
  rot.insert(it + 1, x);
}

void erase_value(std::vector<VertexId>& rot, VertexId x) {
  rot.erase(std::find(rot.begin(), rot.end(), x));
}

VertexId succ(const Rot& rot, VertexId at, VertexId after) {
  const auto& r = rot[at];
  auto it = std::find(r.begin(), r.end(), after);
  ++it;
  return it == r.end() ? r.front() : *it;
}

bool has(const std::vector<VertexId>& r, VertexId x) {
  return std::find(r.begin(), r.end(), x) != r.end();
}

PlaneGraph from_rot(const Rot& rot) {
  RotationSpec spec;
  for (VertexId v = 0; v < static_cast<VertexId>(rot.size()); ++v) spec.emplace_back(v, rot[v]);
  return build_from_rotation(spec);
}

// A face (a,b,c) is the walk a->b->c->a, i.e. c follows a in rot(b).
PlaneGraph triangulate(SplitMix64& rng, int n, int flips) {
  Rot rot(n);
  rot[0] = {1, 2};
  rot[1] = {2, 0};
  rot[2] = {0, 1};
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  for (VertexId x = 3; x < n; ++x) {
    size_t idx = rng.below(faces.size());
    auto [a, b, c] = faces[idx];
    insert_after(rot[b], a, x);
    insert_after(rot[c], b, x);
    insert_after(rot[a], c, x);
    rot[x] = {a, c, b};
    faces[idx] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }

  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId w : rot[u])
      if (u < w) edges.emplace_back(u, w);
  if (flips < 0) flips = 10 * static_cast<int>(edges.size());
  // Proposals are uniform edges; a flip is kept when it does not increase
  // the sum of (d - 6)^2, which spreads degrees toward the planar average.
  for (int step = 0; step < flips && n > 4; ++step) {
    size_t idx = rng.below(edges.size());
    auto [u, v] = edges[idx];
    VertexId w = succ(rot, v, u);
    VertexId z = succ(rot, u, v);
    int du = static_cast<int>(rot[u].size()), dv = static_cast<int>(rot[v].size());
    int dw = static_cast<int>(rot[w].size()), dz = static_cast<int>(rot[z].size());
    if (du <= 3 || dv <= 3 || w == z || has(rot[w], z)) continue;
    if (du + dv < dw + dz + 2) continue;
    erase_value(rot[u], v);
    erase_value(rot[v], u);
    insert_after(rot[w], v, z);
    insert_after(rot[z], u, w);
    edges[idx] = {w, z};
  }
  return from_rot(rot);
}

bool connected_without_edge(const Rot& rot, VertexId a, VertexId b) {
  std::vector<char> seen(rot.size(), 0);
  std::vector<VertexId> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : rot[v]) {
      if ((v == a && u == b) || (v == b && u == a)) continue;
      if (u == b) return true;
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return false;
}

PlaneGraph thin(SplitMix64& rng, const PlaneGraph& g, double keep) {
  Rot rot(g.id_bound());
  for (VertexId v : g.vertices()) rot[v] = g.rotation(v);
  for (auto [u, v] : g.edges()) {
    if (rng.uniform() < keep) continue;
    if (!connected_without_edge(rot, u, v)) continue;
    erase_value(rot[u], v);
    erase_value(rot[v], u);
  }
  RotationSpec spec;
  for (VertexId v : g.vertices()) spec.emplace_back(v, rot[v]);
  return build_from_rotation(spec);
}

void check_spec(const GenSpec& spec) {
  if (spec.mode != GenMode::Fixture && spec.n_target < 4)
    throw Error(ErrorCode::BadSpec, "n_target must be at least 4");
  if (spec.edge_keep_probability < 0.0 || spec.edge_keep_probability > 1.0)
    throw Error(ErrorCode::BadSpec, "keep probability outside [0,1]");
}

// Canonical cyclic start: smallest neighbour first.
std::vector<VertexId> canonical(std::vector<VertexId> r) {
  if (r.empty()) return r;
  auto it = std::min_element(r.begin(), r.end());
  std::rotate(r.begin(), it, r.end());
  return r;
}

struct P2 {
  double x, y;
};

PlaneGraph from_drawing(const std::vector<P2>& pts, const std::vector<Edge>& edges) {
  Rot rot(pts.size());
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  RotationSpec spec;
  for (VertexId v = 0; v < static_cast<VertexId>(pts.size()); ++v) {
    auto angle = [&](VertexId u) {
      return std::atan2(pts[u].y - pts[v].y, pts[u].x - pts[v].x);
    };
    std::sort(rot[v].begin(), rot[v].end(),
              [&](VertexId a, VertexId b) { return angle(a) > angle(b); });
    spec.emplace_back(v, canonical(rot[v]));
  }
  return build_from_rotation(spec);
}

struct P3 {
  double x, y, z;
};

// Convex polytope centred at the origin; edges are vertex pairs at the
// minimum distance.
PlaneGraph from_polytope(const std::vector<P3>& pts) {
  int n = static_cast<int>(pts.size());
  auto dist = [&](int a, int b) {
    double dx = pts[a].x - pts[b].x, dy = pts[a].y - pts[b].y, dz = pts[a].z - pts[b].z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
  };
  double best = 1e300;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) best = std::min(best, dist(a, b));
  Rot rot(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && dist(a, b) < best * 1.0001) rot[a].push_back(b);
  RotationSpec spec;
  for (int v = 0; v < n; ++v) {
    P3 nrm = pts[v];
    // Tangent basis (e1, e2) with e1 x e2 along the outward normal.
    P3 ref = std::abs(nrm.x) < 0.9 ? P3{1, 0, 0} : P3{0, 1, 0};
    auto cross = [](P3 a, P3 b) {
      return P3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    };
    auto dot = [](P3 a, P3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; };
    P3 e1 = cross(ref, nrm);
    P3 e2 = cross(nrm, e1);
    auto angle = [&](int u) {
      P3 d{pts[u].x - pts[v].x, pts[u].y - pts[v].y, pts[u].z - pts[v].z};
      return std::atan2(dot(d, e2), dot(d, e1));
    };
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
    spec.emplace_back(v, canonical(rot[v]));
  }
  return build_from_rotation(spec);
}

PlaneGraph cycle(int n) {
  std::vector<P2> pts;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    double a = M_PI / 2 - 2 * M_PI * i / n;
    pts.push_back({std::cos(a), std::sin(a)});
    edges.emplace_back(i, (i + 1) % n);
  }
  return from_drawing(pts, edges);
}

PlaneGraph wheel(int k) {
  std::vector<P2> pts{{0, 0}};
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    double a = M_PI / 2 - 2 * M_PI * i / k;
    pts.push_back({std::cos(a), std::sin(a)});
    edges.emplace_back(0, i + 1);
    edges.emplace_back(i + 1, (i + 1) % k + 1);
  }
  return from_drawing(pts, edges);
}

PlaneGraph grid(int a, int b) {
  std::vector<P2> pts;
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      pts.push_back({static_cast<double>(j), -static_cast<double>(i)});
      int id = i * b + j;
      if (j + 1 < b) edges.emplace_back(id, id + 1);
      if (i + 1 < a) edges.emplace_back(id, id + b);
    }
  return from_drawing(pts, edges);
}

// A 5(5)-vertex 0 whose edge to 1 is special: both triangles at 0-1 border
// 4-faces across the edges 1-2 and 1-5.
PlaneGraph figure1() {
  std::vector<P2> pts;
  pts.push_back({0, 0});
  for (int i = 0; i < 5; ++i) {
    double a = M_PI / 2 - 2 * M_PI * i / 5;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  pts.push_back({0, 4});
  pts.push_back({0.3, 2});
  pts.push_back({-0.3, 2});
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4},
                          {4, 5}, {5, 1}, {6, 2}, {6, 5}, {6, 7}, {6, 8}, {1, 7}, {1, 8}};
  return from_drawing(pts, edges);
}

}  // namespace

PlaneGraph random_triangulation(const GenSpec& spec) {
  check_spec(spec);
  SplitMix64 rng(spec.seed);
  return triangulate(rng, spec.n_target, spec.flips);
}

PlaneGraph subsample(const PlaneGraph& g, const GenSpec& spec) {
  check_spec(spec);
  SplitMix64 rng(mix_seed(spec.seed, 0x5ab5));
  return thin(rng, g, spec.edge_keep_probability);
}

PlaneGraph generate(const GenSpec& spec) {
  check_spec(spec);
  if (spec.mode == GenMode::Fixture) return fixture(spec.fixture);
  SplitMix64 rng(spec.seed);
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    PlaneGraph g = triangulate(rng, spec.n_target, spec.flips);
    if (spec.mode == GenMode::Subsampled) g = thin(rng, g, spec.edge_keep_probability);
    const auto& f = spec.delta_filter;
    if (f.empty() || std::find(f.begin(), f.end(), g.max_degree()) != f.end()) return g;
  }
  throw Error(ErrorCode::BadSpec, "no draw met the Δ filter");
}

std::vector<std::string> fixture_names() {
  return {"K4", "C5", "C6", "W6", "W7", "octahedron", "icosahedron", "figure1", "grid_3x3"};
}

PlaneGraph fixture(const std::string& name) {
  static const std::regex cyc("C([0-9]+)"), whl("W([0-9]+)"), grd("grid_([0-9]+)x([0-9]+)");
  std::smatch m;
  if (name == "K4") return from_polytope({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
  if (name == "octahedron")
    return from_polytope({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  if (name == "icosahedron") {
    const double p = (1 + std::sqrt(5.0)) / 2;
    std::vector<P3> pts;
    for (double s : {-1.0, 1.0})
      for (double t : {-1.0, 1.0}) {
        pts.push_back({0, s, t * p});
        pts.push_back({s, t * p, 0});
        pts.push_back({t * p, 0, s});
      }
    return from_polytope(pts);
  }
  if (name == "figure1") return figure1();
  if (std::regex_match(name, m, cyc)) {
    int n = std::stoi(m[1]);
    if (n >= 3) return cycle(n);
  }
  if (std::regex_match(name, m, whl)) {
    int k = std::stoi(m[1]);
    if (k >= 3) return wheel(k);
  }
  if (std::regex_match(name, m, grd)) {
    int a = std::stoi(m[1]), b = std::stoi(m[2]);
    if (a >= 1 && b >= 1) return grid(a, b);
  }
  throw Error(ErrorCode::UnknownFixture, name);
}

}  // namespace d2tk
