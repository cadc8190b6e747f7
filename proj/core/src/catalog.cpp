#include "d2tk/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "catalog_internal.hpp"
#include "d2tk/analysis.hpp"
#include "d2tk/error.hpp"

namespace d2tk {

namespace detail {

bool tris(const Labeling& l, int n) {
  for (int i = 1; i <= n; ++i)
    if (!l.tri(i)) return false;
  return true;
}

Recipe min_degree_recipe() {
  return {"delete v, join its neighbours", [](const Labeling&) { return true; },
          [](const Labeling& l) { return l.k() == 2 ? Chords{{1, 2}} : Chords{}; }};
}

Chords fan_from(const Labeling& l, int p) {
  Chords out;
  for (int q = 1; q <= l.k(); ++q)
    if (q != p) out.emplace_back(p, q);
  return out;
}

std::vector<Recipe> four_two_recipes() {
  return {
      {"adjacent triangles f1,f2: join v2 v4",
       [](const Labeling& l) { return l.tri(1) && l.tri(2); },
       [](const Labeling&) { return Chords{{2, 4}}; }},
      {"opposite triangles f1,f3: join v1 v4 and v2 v3",
       [](const Labeling& l) { return l.tri(1) && l.tri(3); },
       [](const Labeling&) { return Chords{{1, 4}, {2, 3}}; }},
  };
}

std::vector<Recipe> six_five_recipes(bool with_fan) {
  std::vector<Recipe> out;
  if (with_fan)
    out.push_back({"fan from a 4-vertex among v2..v5",
                   [](const Labeling& l) {
                     if (!tris(l, 5)) return false;
                     for (int p = 2; p <= 5; ++p)
                       if (l.deg(p) <= 4) return true;
                     return false;
                   },
                   [](const Labeling& l) {
                     for (int p = 2; p <= 5; ++p)
                       if (l.deg(p) <= 4) return fan_from(l, p);
                     return Chords{};
                   }});
  // Close v1 v6, then join v_p to the two vertices two steps away on the
  // closed 6-cycle. v_p gains one edge; v1 or v6 gains two.
  for (int p : {2, 3}) {
    int twice = p == 2 ? 6 : 1;
    int a = p - 2 < 1 ? p + 4 : p - 2;
    int b = p + 2;
    out.push_back({"close v1 v6 and join v" + std::to_string(p) + " across",
                   [=](const Labeling& l) {
                     return tris(l, 5) && l.deg(p) <= 5 && l.deg(twice) <= 5;
                   },
                   [=](const Labeling&) { return Chords{{1, 6}, {p, a}, {p, b}}; }});
  }
  return out;
}

}  // namespace detail

namespace {

using namespace detail;

const std::vector<Entry>& entries(int delta_case) {
  static const std::vector<Entry> e6 = entries_delta6();
  static const std::vector<Entry> e7 = entries_delta7();
  static const std::vector<Entry> e8 = entries_delta8();
  switch (delta_case) {
    case 6: return e6;
    case 7: return e7;
    case 8: return e8;
  }
  throw Error(ErrorCode::UnsupportedDelta, "no catalog for Δ=" + std::to_string(delta_case));
}

bool embeddable(const PlaneGraph& g, VertexId v, const std::vector<Edge>& chords) {
  std::vector<Edge> fresh;
  for (auto e : chords) {
    if (e.first == e.second) return false;
    if (!g.adjacent(e.first, e.second)) fresh.push_back(e);
  }
  for (size_t i = 0; i < fresh.size(); ++i)
    for (size_t j = i + 1; j < fresh.size(); ++j)
      if (chords_cross(g, v, fresh[i], fresh[j])) return false;
  if (g.num_vertices() <= 1) return false;
  // G - v + chords must stay connected.
  std::vector<char> seen(g.id_bound(), 0);
  seen[v] = 1;
  VertexId start = g.rotation(v).empty() ? v : g.rotation(v).front();
  if (start == v) return false;
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  int reached = 1;
  auto visit = [&](VertexId u) {
    if (seen[u]) return;
    seen[u] = 1;
    ++reached;
    stack.push_back(u);
  };
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId u : g.rotation(x)) visit(u);
    for (auto [a, b] : fresh) {
      if (a == x) visit(b);
      if (b == x) visit(a);
    }
  }
  return reached == g.num_vertices() - 1;
}

std::optional<ReducibleConfiguration> try_entry(const Context& cx, const Entry& e, VertexId v) {
  Center c(cx, v);
  if (c.k() == 0) return std::nullopt;
  auto clause = e.trigger(c);
  if (!clause) return std::nullopt;
  for (const auto& r : e.recipes) {
    for (bool refl : {false, true}) {
      for (int off = 0; off < c.k(); ++off) {
        Labeling l(c, off, refl);
        if (!r.guard(l)) continue;
        std::vector<Edge> chords;
        for (auto [a, b] : r.chords(l)) chords.emplace_back(l.w(a), l.w(b));
        if (!embeddable(cx.g, v, chords)) continue;
        ReducibleConfiguration out;
        out.id = e.id;
        out.delta_case = cx.delta;
        out.center = v;
        out.witnesses = l.witnesses();
        out.recipe.remove = v;
        out.recipe.chords = std::move(chords);
        out.clause = *clause + "; " + r.name;
        return out;
      }
    }
  }
  return std::nullopt;
}

void check_case(const PlaneGraph& g, int delta_case) {
  entries(delta_case);
  if (g.max_degree() != delta_case)
    throw Error(ErrorCode::UnsupportedDelta, "graph has Δ=" + std::to_string(g.max_degree()) +
                                                 ", asked for " + std::to_string(delta_case));
}

}  // namespace

std::vector<CatalogEntryInfo> catalog_entries(int delta_case) {
  std::vector<CatalogEntryInfo> out;
  for (const auto& e : entries(delta_case)) out.push_back({e.id, delta_case, e.statement});
  return out;
}

std::vector<ReducibleConfiguration> detect(const PlaneGraph& g, int delta_case) {
  check_case(g, delta_case);
  Context cx(g, delta_case);
  std::vector<ReducibleConfiguration> out;
  for (const auto& e : entries(delta_case))
    for (VertexId v : g.vertices())
      if (auto hit = try_entry(cx, e, v)) out.push_back(std::move(*hit));
  return out;
}

std::optional<ReducibleConfiguration> detect_first(const PlaneGraph& g, int delta_case) {
  check_case(g, delta_case);
  Context cx(g, delta_case);
  for (const auto& e : entries(delta_case))
    for (VertexId v : g.vertices())
      if (auto hit = try_entry(cx, e, v)) return hit;
  return std::nullopt;
}

std::optional<ReducibleConfiguration> match_entry(const PlaneGraph& g, int delta_case,
                                                  const std::string& id, VertexId center) {
  check_case(g, delta_case);
  if (!g.has_vertex(center)) throw Error(ErrorCode::UnknownVertex, std::to_string(center));
  Context cx(g, delta_case);
  for (const auto& e : entries(delta_case))
    if (e.id == id) return try_entry(cx, e, center);
  throw Error(ErrorCode::BadSpec, "no catalog entry " + id);
}

ReducibilityCertificate certify(const PlaneGraph& g, const ReducibleConfiguration& c) {
  ReducibilityCertificate cert;
  SurgeryResult res = apply_surgery_report(g, c.recipe);
  const PlaneGraph& h = res.graph;
  VertexId v = c.recipe.remove;
  // h contains G - v, so only pairs joined through v can lose distance 2.
  const auto& nbrs = g.rotation(v);
  for (size_t i = 0; i < nbrs.size(); ++i)
    for (size_t j = i + 1; j < nbrs.size(); ++j) {
      VertexId a = nbrs[i], b = nbrs[j];
      bool close = h.adjacent(a, b);
      for (VertexId x : h.rotation(a)) {
        if (close) break;
        close = h.adjacent(x, b);
      }
      if (!close) cert.far_pairs.push_back(make_edge(a, b));
    }
  cert.proper = cert.far_pairs.empty();
  cert.shrinks = h.num_vertices() + h.num_edges() < g.num_vertices() + g.num_edges();
  cert.d2 = d2_exact(g, v);
  cert.headroom = 2 * g.max_degree() + 6 - cert.d2;
  cert.delta_before = g.max_degree();
  cert.delta_after = h.max_degree();
  cert.delta_ok = cert.delta_after <= cert.delta_before;
  cert.inserted = res.inserted;
  cert.skipped = res.skipped;
  return cert;
}

std::string format_configuration(const ReducibleConfiguration& c) {
  std::ostringstream out;
  out << c.id << ' ' << c.center << " [";
  for (size_t i = 0; i < c.witnesses.size(); ++i) out << (i ? " " : "") << c.witnesses[i];
  out << "] delete=" << c.recipe.remove << " chords=";
  if (c.recipe.chords.empty()) out << '-';
  for (size_t i = 0; i < c.recipe.chords.size(); ++i)
    out << (i ? "," : "") << c.recipe.chords[i].first << '-' << c.recipe.chords[i].second;
  return out.str();
}

}  // namespace d2tk
