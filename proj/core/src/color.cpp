#include "d2tk/color.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "d2tk/catalog.hpp"
#include "d2tk/error.hpp"

namespace d2tk {

namespace {

int palette_of(const std::vector<int>& a) {
  std::set<int> used;
  for (int c : a)
    if (c >= 0) used.insert(c);
  return static_cast<int>(used.size());
}

std::vector<int> greedy_on(const SimpleGraph& h, const std::vector<VertexId>& order) {
  std::vector<int> color(h.id_bound(), -1);
  std::vector<int> seen(h.size() + 2, -1);
  for (VertexId v : order) {
    for (VertexId u : h.adj[v])
      if (color[u] >= 0 && color[u] < static_cast<int>(seen.size())) seen[color[u]] = v;
    int c = 0;
    while (seen[c] == v) ++c;
    color[v] = c;
  }
  return color;
}

// Smallest-last order.
std::vector<VertexId> degeneracy_order(const SimpleGraph& h) {
  std::vector<int> deg(h.id_bound(), 0);
  std::vector<char> gone(h.id_bound(), 0);
  for (VertexId v : h.vertices) deg[v] = static_cast<int>(h.adj[v].size());
  std::vector<VertexId> removed;
  std::set<std::pair<int, VertexId>> queue;
  for (VertexId v : h.vertices) queue.insert({deg[v], v});
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[v] = 1;
    removed.push_back(v);
    for (VertexId u : h.adj[v]) {
      if (gone[u]) continue;
      queue.erase({deg[u], u});
      queue.insert({--deg[u], u});
    }
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

std::vector<VertexId> order_for(const SimpleGraph& h, GreedyOrder order) {
  switch (order) {
    case GreedyOrder::Degeneracy: return degeneracy_order(h);
    case GreedyOrder::DescendingD2: {
      std::vector<VertexId> out = h.vertices;
      std::stable_sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
        return h.adj[a].size() > h.adj[b].size();
      });
      return out;
    }
    case GreedyOrder::Input: return h.vertices;
  }
  return h.vertices;
}

ColoringCertificate finish(const PlaneGraph& g, std::vector<int> a, std::string method) {
  ColoringCertificate out;
  out.assignment = std::move(a);
  out.palette_size = palette_of(out.assignment);
  out.valid = validate(g, out.assignment).valid;
  out.method = std::move(method);
  return out;
}

using Mask = uint64_t;

class Exact {
 public:
  explicit Exact(const SimpleGraph& h) : n_(h.size()), nb_(n_, 0) {
    std::vector<int> index(h.id_bound(), -1);
    for (int i = 0; i < n_; ++i) index[h.vertices[i]] = i;
    for (int i = 0; i < n_; ++i)
      for (VertexId u : h.adj[h.vertices[i]]) nb_[i] |= Mask(1) << index[u];
  }

  std::vector<int> solve() {
    if (n_ == 0) return {};
    lower_ = max_clique();
    color_.assign(n_, -1);
    // DSATUR without backtracking gives the first upper bound.
    best_ = n_ + 1;
    dsatur_greedy();
    if (best_ > lower_) {
      color_.assign(n_, -1);
      branch(0, 0);
    }
    return best_color_;
  }

 private:
  int max_clique() {
    int best = 0;
    std::function<void(Mask, int)> grow = [&](Mask cand, int size) {
      if (!cand) {
        best = std::max(best, size);
        return;
      }
      if (size + __builtin_popcountll(cand) <= best) return;
      while (cand) {
        if (size + __builtin_popcountll(cand) <= best) return;
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        grow(cand & nb_[v], size + 1);
      }
    };
    Mask all = n_ == 64 ? ~Mask(0) : (Mask(1) << n_) - 1;
    grow(all, 0);
    return best;
  }

  int pick() const {
    int best = -1, bsat = -1, bdeg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      Mask used = 0;
      int deg = 0;
      for (Mask m = nb_[v]; m; m &= m - 1) {
        int u = __builtin_ctzll(m);
        if (color_[u] >= 0) used |= Mask(1) << color_[u];
        else ++deg;
      }
      int sat = __builtin_popcountll(used);
      if (sat > bsat || (sat == bsat && deg > bdeg)) best = v, bsat = sat, bdeg = deg;
    }
    return best;
  }

  bool free_for(int v, int c) const {
    for (Mask m = nb_[v]; m; m &= m - 1)
      if (color_[__builtin_ctzll(m)] == c) return false;
    return true;
  }

  void dsatur_greedy() {
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      int v = pick();
      int c = 0;
      while (!free_for(v, c)) ++c;
      color_[v] = c;
      used = std::max(used, c + 1);
    }
    best_ = used;
    best_color_ = color_;
  }

  void branch(int done, int used) {
    if (best_ <= lower_) return;
    if (done == n_) {
      if (used < best_) best_ = used, best_color_ = color_;
      return;
    }
    int v = pick();
    for (int c = 0; c <= used && c < best_ - 1; ++c) {
      if (!free_for(v, c)) continue;
      color_[v] = c;
      branch(done + 1, std::max(used, c + 1));
      color_[v] = -1;
      if (best_ <= lower_) return;
    }
  }

  int n_;
  std::vector<Mask> nb_;
  std::vector<int> color_, best_color_;
  int lower_ = 0, best_ = 0;
};

std::vector<int> by_id(const SimpleGraph& h, const std::vector<int>& dense) {
  std::vector<int> out(h.id_bound(), -1);
  for (int i = 0; i < h.size(); ++i) out[h.vertices[i]] = dense[i];
  return out;
}

ColoringCertificate fallback(const PlaneGraph& g) {
  if (g.num_vertices() <= 20) return exact_chi2(g, 20).second;
  return greedy(g, GreedyOrder::Degeneracy);
}

// Color for `v` in `h`: smallest index not used within distance 2.
int free_color(const PlaneGraph& h, VertexId v, const std::vector<int>& a) {
  std::vector<char> used;
  auto mark = [&](VertexId u) {
    if (u == v || a[u] < 0) return;
    if (a[u] >= static_cast<int>(used.size())) used.resize(a[u] + 1, 0);
    used[a[u]] = 1;
  };
  for (VertexId u : h.rotation(v)) {
    mark(u);
    for (VertexId w : h.rotation(u)) mark(w);
  }
  int c = 0;
  while (c < static_cast<int>(used.size()) && used[c]) ++c;
  return c;
}

}  // namespace

Validation validate(const PlaneGraph& g, const std::vector<int>& a) {
  for (VertexId v : g.vertices())
    if (v >= static_cast<int>(a.size()) || a[v] < 0)
      throw Error(ErrorCode::PartialAssignment, "vertex " + std::to_string(v) + " has no color");
  SimpleGraph h = square(g);
  for (VertexId v : h.vertices)
    for (VertexId u : h.adj[v])
      if (u > v && a[u] == a[v]) return {false, Edge{v, u}};
  return {};
}

ColoringCertificate greedy(const PlaneGraph& g, GreedyOrder order) {
  SimpleGraph h = square(g);
  return finish(g, greedy_on(h, order_for(h, order)), "greedy");
}

std::vector<int> exact_coloring(const SimpleGraph& h, int bound) {
  bound = std::min(bound, 64);
  if (h.size() > bound)
    throw Error(ErrorCode::TooLarge, std::to_string(h.size()) + " vertices, bound " +
                                         std::to_string(bound));
  return by_id(h, Exact(h).solve());
}

std::pair<int, ColoringCertificate> exact_chi2(const PlaneGraph& g, int bound) {
  auto cert = finish(g, exact_coloring(square(g), bound), "exact");
  return {cert.palette_size, cert};
}

ColoringCertificate color_constructive(const PlaneGraph& g) {
  const int cap = 2 * g.max_degree() + 7;
  auto check = [&](ColoringCertificate c, std::vector<TraceStep> trace) {
    c.trace = std::move(trace);
    if (!c.valid || c.palette_size > cap) {
      std::ostringstream msg;
      msg << "palette " << c.palette_size << " > " << cap << " (method " << c.method << ")";
      for (const auto& s : c.trace) msg << "\n  " << format_trace_step(s);
      throw Error(ErrorCode::PaletteExceeded, msg.str());
    }
    return c;
  };

  int delta = g.max_degree();
  if (delta < 6 || delta > 8) {
    TraceStep note;
    note.note = "Δ=" + std::to_string(delta) + " outside 6..8, direct solver";
    return check(fallback(g), {note});
  }

  struct Level {
    PlaneGraph graph;
    VertexId removed;
  };
  std::vector<Level> stack;
  std::vector<TraceStep> trace;
  auto give_up = [&](const std::string& why) {
    trace.push_back({"", -1, {}, why + "; falling back"});
    return check(fallback(g), trace);
  };

  PlaneGraph cur = g;
  while (cur.num_vertices() > 12 && cur.max_degree() >= 6) {
    int d = cur.max_degree();
    if (d > delta) return give_up("Δ grew to " + std::to_string(d));
    auto hit = detect_first(cur, d);
    if (!hit) return give_up("no reducible configuration at n=" + std::to_string(cur.num_vertices()));
    SurgeryResult res = apply_surgery_report(cur, hit->recipe);
    trace.push_back({hit->id, hit->recipe.remove, res.inserted, ""});
    stack.push_back({std::move(cur), hit->recipe.remove});
    cur = std::move(res.graph);
  }

  std::vector<int> a;
  if (cur.num_vertices() <= 12) a = exact_chi2(cur, 12).second.assignment;
  else a = greedy(cur, GreedyOrder::Degeneracy).assignment;
  a.resize(g.id_bound(), -1);
  if (palette_of(a) > cap) return give_up("base coloring exceeds the palette");

  while (!stack.empty()) {
    const Level& top = stack.back();
    int c = free_color(top.graph, top.removed, a);
    if (c >= cap) return give_up("no free color for " + std::to_string(top.removed));
    a[top.removed] = c;
    stack.pop_back();
  }

  auto cert = finish(g, std::move(a), "constructive");
  if (!cert.valid) return give_up("extended coloring is not proper");
  return check(cert, trace);
}

std::string format_trace_step(const TraceStep& s) {
  if (s.id.empty()) return "note " + s.note;
  std::string out = s.id + " delete=" + std::to_string(s.removed) + " chords=";
  if (s.chords.empty()) out += "-";
  for (size_t i = 0; i < s.chords.size(); ++i)
    out += (i ? "," : "") + std::to_string(s.chords[i].first) + "-" +
           std::to_string(s.chords[i].second);
  return out;
}

}  // namespace d2tk
