#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "d2tk/analysis.hpp"
#include "d2tk/plane_graph.hpp"

namespace d2tk::detail {

using Pred = std::function<bool(const VertexProfile&)>;

// Degree in [klo, khi] and m3 in [mlo, mhi].
struct Cls {
  int klo, khi, mlo, mhi;
  bool operator()(const VertexProfile& x) const {
    return x.degree >= klo && x.degree <= khi && x.m3 >= mlo && x.m3 <= mhi;
  }
};

inline Cls deg(int k) { return {k, k, 0, 1 << 20}; }
inline Cls deg_le(int k) { return {0, k, 0, 1 << 20}; }
inline Cls deg_ge(int k) { return {k, 1 << 20, 0, 1 << 20}; }
// k(d)
inline Cls kd(int k, int d) { return {k, k, d, d}; }
// k(d-)
inline Cls kd_le(int k, int d) { return {k, k, 0, d}; }
// k(d+)
inline Cls kd_ge(int k, int d) { return {k, k, d, 1 << 20}; }
inline Cls kd_in(int k, int lo, int hi) { return {k, k, lo, hi}; }

inline bool full(const VertexProfile& x) { return x.m3 == x.degree; }

class Context {
 public:
  Context(const PlaneGraph& g, int delta) : g(g), delta(delta), P(g, delta) {}

  const PlaneGraph& g;
  int delta;
  ProfileTable P;

  bool two_tri(VertexId a, VertexId b) const {
    return g.adjacent(a, b) && in_two_triangles(g, a, b);
  }
  bool special(VertexId a, VertexId b) const { return edge_flags(g, a, b, delta).special; }
  bool support(VertexId a, VertexId b) const { return edge_flags(g, a, b, delta).support; }
};

class Center {
 public:
  Center(const Context& cx, VertexId v) : cx(cx), v(v), p(cx.P[v]), nbrs(cx.g.rotation(v)) {}

  const Context& cx;
  VertexId v;
  const VertexProfile& p;
  const std::vector<VertexId>& nbrs;

  int k() const { return p.degree; }
  int count(const Pred& pred) const {
    int c = 0;
    for (VertexId u : nbrs) c += pred(cx.P[u]) ? 1 : 0;
    return c;
  }
  bool any(const Pred& pred) const { return count(pred) > 0; }
  // Incident faces (by slot) of length at least len.
  int faces_at_least(int len) const {
    int c = 0;
    for (auto [l, n] : p.mk) c += l >= len ? n : 0;
    return c;
  }
  bool has_support() const {
    for (VertexId u : nbrs)
      if (cx.support(v, u)) return true;
    return false;
  }
};

// v_1..v_k read clockwise from `offset`, or counter-clockwise when
// reflected. f_i is the face between v_i and v_{i+1}.
class Labeling {
 public:
  Labeling(const Center& c, int offset, bool reflected)
      : c_(c), k_(c.k()), off_(offset), refl_(reflected) {}

  int k() const { return k_; }
  VertexId w(int i) const { return c_.nbrs[index(i)]; }
  const VertexProfile& p(int i) const { return c_.cx.P[w(i)]; }
  int deg(int i) const { return p(i).degree; }
  int flen(int i) const {
    int slot = refl_ ? mod(index(i) - 1) : index(i);
    return c_.cx.g.face_length(c_.cx.g.slot_face(c_.v, slot));
  }
  bool tri(int i) const { return flen(i) == 3; }
  bool adj(int i, int j) const { return c_.cx.g.adjacent(w(i), w(j)); }
  bool two_tri(int i, int j) const { return c_.cx.two_tri(w(i), w(j)); }
  bool support(int i) const { return c_.cx.support(c_.v, w(i)); }
  bool special(int i) const { return c_.cx.special(c_.v, w(i)); }
  std::vector<VertexId> witnesses() const {
    std::vector<VertexId> out;
    for (int i = 1; i <= k_; ++i) out.push_back(w(i));
    return out;
  }

 private:
  int mod(int x) const { return ((x % k_) + k_) % k_; }
  int index(int i) const { return refl_ ? mod(off_ - (i - 1)) : mod(off_ + (i - 1)); }

  const Center& c_;
  int k_, off_;
  bool refl_;
};

using Chords = std::vector<std::pair<int, int>>;

struct Recipe {
  std::string name;
  std::function<bool(const Labeling&)> guard;
  std::function<Chords(const Labeling&)> chords;
};

struct Entry {
  std::string id;
  std::string statement;
  // Returns the clause that fired, if any.
  std::function<std::optional<std::string>(const Center&)> trigger;
  std::vector<Recipe> recipes;
};

using Clause = std::optional<std::string>;

inline Clause when(bool cond, const char* text) { return cond ? Clause(text) : std::nullopt; }

// Recipe with a fixed chord list.
inline Recipe join(std::string name, std::function<bool(const Labeling&)> guard, Chords chords) {
  return {std::move(name), std::move(guard), [chords](const Labeling&) { return chords; }};
}

inline Recipe remove_only() {
  return join("delete v", [](const Labeling&) { return true; }, {});
}

std::vector<Entry> entries_delta6();
std::vector<Entry> entries_delta7();
std::vector<Entry> entries_delta8();

// Shared recipe shapes.
Recipe min_degree_recipe();
// Chords from v_p to every other neighbour.
Chords fan_from(const Labeling& l, int p);
// With f_1..f_4 or f_1..f_3 etc. given, the two 4(2) recipes.
std::vector<Recipe> four_two_recipes();
// 6(5) recipes: fan from a 4⁻ vertex among v2..v5, then the cycle-closing
// variants around v_p.
std::vector<Recipe> six_five_recipes(bool with_fan);
// Triangles on f_1..f_{n}.
bool tris(const Labeling& l, int n);

}  // namespace d2tk::detail
