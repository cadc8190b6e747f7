#include "catalog_internal.hpp"

namespace d2tk::detail {

namespace {

bool bad5(const VertexProfile& x) { return x.degree == 5 && x.m3 >= 4; }

}  // namespace

std::vector<Entry> entries_delta6() {
  std::vector<Entry> out;

  out.push_back({"C6.1", "minimum degree at least 3",
                 [](const Center& c) { return when(c.k() <= 2, "d(v)<=2"); },
                 {min_degree_recipe()}});

  out.push_back({"C6.2", "a 3-vertex lies on no 3-face",
                 [](const Center& c) { return when(c.k() == 3 && c.p.m3 >= 1, "3-vertex, m3>=1"); },
                 {join("join v1 v3", [](const Labeling& l) { return l.tri(1); }, {{1, 3}})}});

  out.push_back({"C6.3", "a 3-vertex lies on at most one 4-face",
                 [](const Center& c) { return when(c.k() == 3 && c.p.m4 >= 2, "3-vertex, m4>=2"); },
                 {join("join v1 v3",
                       [](const Labeling& l) { return l.flen(1) == 4 && l.flen(2) == 4; },
                       {{1, 3}})}});

  out.push_back({"C6.4", "every neighbour of a 3-vertex is a 6(4-)-vertex",
                 [](const Center& c) {
                   return when(c.k() == 3 && c.any(deg_le(5)), "3-vertex with a 5- neighbour");
                 },
                 {join("fan from v1", [](const Labeling& l) { return l.deg(1) <= 5; },
                       {{1, 2}, {1, 3}})}});

  out.push_back({"C6.5", "a 4-vertex has m3 at most 2",
                 [](const Center& c) { return when(c.k() == 4 && c.p.m3 >= 3, "4-vertex, m3>=3"); },
                 {join("join v1 v4", [](const Labeling& l) { return tris(l, 3); }, {{1, 4}})}});

  out.push_back({"C6.6", "a 4-vertex has no k(k)-neighbour with k<=6",
                 [](const Center& c) {
                   return when(c.k() == 4 && c.any([](const VertexProfile& x) {
                     return full(x) && x.degree <= 6;
                   }),
                               "4-vertex with a k(k) neighbour");
                 },
                 {join("join v2 v4",
                       [](const Labeling& l) {
                         return full(l.p(2)) && l.deg(2) <= 6 && l.tri(1) && l.tri(2);
                       },
                       {{2, 4}})}});

  out.push_back(
      {"C6.7", "a 4(1)-vertex with a 4-neighbour has no other 4- or bad 5-neighbour",
       [](const Center& c) {
         if (!c.p.is(4, 1) || c.count(deg(4)) == 0) return Clause();
         int low = c.count([](const VertexProfile& x) { return x.degree == 4 || bad5(x); });
         return when(low >= 2, "4(1)-vertex, 4-neighbour and another 4 or bad 5");
       },
       {{"fan from the 4-neighbour v1",
         [](const Labeling& l) {
           if (l.deg(1) != 4) return false;
           for (int j = 2; j <= 4; ++j)
             if (l.deg(j) == 4 || bad5(l.p(j))) return true;
           return false;
         },
         [](const Labeling& l) { return fan_from(l, 1); }}}});

  out.push_back(
      {"C6.8", "a 4(1)-vertex with m4=r has at least r+1 6-neighbours",
       [](const Center& c) {
         return when(c.p.is(4, 1) && c.count(deg(6)) <= c.p.m4, "4(1)-vertex, n6<=m4");
       },
       {{"v1 (on the triangle) 5-: fan to v3 v4",
         [](const Labeling& l) {
           int low = 0;
           for (int i = 1; i <= 4; ++i) low += l.deg(i) <= 5;
           return l.tri(1) && l.deg(1) <= 5 && low >= 2;
         },
         [](const Labeling&) { return Chords{{1, 3}, {1, 4}}; }},
        join("v3 v4 both 5-: join v3 v4, v3 v2, v4 v1",
             [](const Labeling& l) { return l.tri(1) && l.deg(3) <= 5 && l.deg(4) <= 5; },
             {{3, 4}, {3, 2}, {4, 1}}),
        join("three 4-faces: join v2 v3, v1 v4",
             [](const Labeling& l) {
               return l.tri(1) && l.flen(2) == 4 && l.flen(3) == 4 && l.flen(4) == 4;
             },
             {{2, 3}, {1, 4}})}});

  out.push_back({"C6.9", "a 4(2)-vertex has m4 at most 1",
                 [](const Center& c) { return when(c.p.is(4, 2) && c.p.m4 >= 2, "4(2)-vertex, m4>=2"); },
                 four_two_recipes()});

  out.push_back({"C6.10", "a 4(2)-vertex with m4=r<=1 has at least r+3 6-neighbours",
                 [](const Center& c) {
                   return when(c.p.is(4, 2) && c.p.m4 <= 1 && c.count(deg(6)) < c.p.m4 + 3,
                               "4(2)-vertex, n6<m4+3");
                 },
                 four_two_recipes()});

  out.push_back(
      {"C6.11", "a 4(2)-vertex has neither a 4-neighbour nor a bad 5-neighbour",
       [](const Center& c) {
         if (!c.p.is(4, 2)) return Clause();
         if (c.any(deg(4))) return Clause("4(2)-vertex with a 4-neighbour");
         return when(c.any(bad5), "4(2)-vertex with a bad 5-neighbour");
       },
       {{"fan from the 4-neighbour v1", [](const Labeling& l) { return l.deg(1) == 4; },
         [](const Labeling& l) { return fan_from(l, 1); }},
        join("bad 5-neighbour v1 with v1 v2 in two 3-faces: fan to v3 v4",
             [](const Labeling& l) { return bad5(l.p(1)) && l.two_tri(1, 2); },
             {{1, 3}, {1, 4}})}});

  auto five_four = [](std::string id, std::string statement,
                      std::function<Clause(const Center&)> trig) {
    return Entry{std::move(id), std::move(statement),
                 [trig](const Center& c) { return c.p.is(5, 4) ? trig(c) : Clause(); },
                 {join("join v1 v5", [](const Labeling& l) { return tris(l, 4); }, {{1, 5}})}};
  };

  out.push_back(five_four("C6.12", "a 5(4)-vertex with a 4-neighbour has no other 4- or 5(4)-neighbour",
                          [](const Center& c) {
                            int low = c.count([](const VertexProfile& x) {
                              return x.degree == 4 || x.is(5, 4);
                            });
                            return when(c.any(deg(4)) && low >= 2,
                                        "5(4)-vertex, 4-neighbour and another 4 or 5(4)");
                          }));

  out.push_back(five_four("C6.13", "a 5(4)-vertex has enough 6(5-)-neighbours",
                          [](const Center& c) {
                            int n = c.count(kd_le(6, 5));
                            if (c.p.m4 == 0 && n < 2) return Clause("5(4)-vertex, m4=0, fewer than two 6(5-)");
                            return when(c.p.m4 == 1 && n < 3, "5(4)-vertex, m4=1, fewer than three 6(5-)");
                          }));

  out.push_back(five_four("C6.14", "a 5(4)-vertex has no two non-adjacent 5(4)-neighbours",
                          [](const Center& c) {
                            std::vector<VertexId> f;
                            for (VertexId u : c.nbrs)
                              if (c.cx.P[u].is(5, 4)) f.push_back(u);
                            for (size_t i = 0; i < f.size(); ++i)
                              for (size_t j = i + 1; j < f.size(); ++j)
                                if (!c.cx.g.adjacent(f[i], f[j]))
                                  return Clause("5(4)-vertex with two non-adjacent 5(4)");
                            return Clause();
                          }));

  out.push_back(
      {"C6.15", "a 5(5)-vertex has no 4-, bad 5- or 6(6)-neighbour and n5<=1",
       [](const Center& c) {
         if (!c.p.is(5, 5)) return Clause();
         if (c.any(deg(4))) return Clause("5(5)-vertex with a 4-neighbour");
         if (c.any(bad5)) return Clause("5(5)-vertex with a bad 5-neighbour");
         if (c.any(kd(6, 6))) return Clause("5(5)-vertex with a 6(6)-neighbour");
         return when(c.count(deg(5)) >= 2, "5(5)-vertex, n5>=2");
       },
       {remove_only()}});

  out.push_back(
      {"C6.16", "structure around a 5(5)-vertex: special edges or four 6(4-)-neighbours",
       [](const Center& c) {
         if (!c.p.is(5, 5)) return Clause();
         const auto& nb = c.nbrs;
         int k = c.k();
         bool some_t = false;
         for (int i = 0; i < k; ++i) {
           if (!c.cx.two_tri(nb[i], nb[(i + 1) % k])) continue;
           some_t = true;
           if (c.any([](const VertexProfile& x) { return !(x.degree == 6 && x.m3 <= 5); }))
             return Clause("5(5)-vertex, doubled edge in E(v), neighbour not 6(5-)");
           for (int j = 0; j < k; ++j) {
             if (j == i || j == (i + 1) % k) continue;
             if (!c.cx.special(c.v, nb[j]))
               return Clause("5(5)-vertex, doubled edge in E(v), non-special v v_j");
           }
         }
         if (!some_t && c.count(kd_le(6, 4)) < 4)
           return Clause("5(5)-vertex, no doubled edge in E(v), fewer than four 6(4-)");
         return Clause();
       },
       {remove_only()}});

  out.push_back(
      {"C6.17", "bounds on 4- and bad 5-neighbours of a 6(5)-vertex",
       [](const Center& c) {
         if (!c.p.is(6, 5)) return Clause();
         int n4 = c.count(deg(4));
         int b5 = c.count(bad5);
         int light6 = c.count(kd_le(6, 4));
         if (n4 >= 4) return Clause("6(5)-vertex, n4>=4");
         if (n4 == 3 && b5 >= 1) return Clause("6(5)-vertex, n4=3, a bad 5");
         if (n4 == 2 && b5 >= 3) return Clause("6(5)-vertex, n4=2, three bad 5");
         if (n4 == 2 && b5 == 2 && light6 < 2) return Clause("6(5)-vertex, n4=2, two bad 5, <2 6(4-)");
         if (n4 == 1 && b5 >= 4) return Clause("6(5)-vertex, n4=1, four bad 5");
         if (n4 == 1 && b5 == 3 && light6 == 0) return Clause("6(5)-vertex, n4=1, three bad 5, no 6(4-)");
         if (n4 == 0 && b5 >= 5) return Clause("6(5)-vertex, five bad 5");
         if (n4 == 0 && c.p.m4 == 1 && b5 == 4 && light6 < 2)
           return Clause("6(5)-vertex, m4=1, four bad 5, <2 6(4-)");
         return Clause();
       },
       six_five_recipes(true)});

  return out;
}

}  // namespace d2tk::detail
