#include "catalog_internal.hpp"

namespace d2tk::detail {

namespace {

bool bad5(const VertexProfile& x) { return x.degree == 5 && x.m3 >= 4; }
bool poor(const VertexProfile& x) { return x.degree == 4 || x.is(5, 5); }
bool six_plus_not_full(const VertexProfile& x) { return x.degree >= 6 && !x.is(6, 6); }

Recipe support_fan() {
  return {"fan from the support neighbour v1",
          [](const Labeling& l) { return l.support(1) && l.tri(1) && l.tri(l.k()); },
          [](const Labeling& l) {
            Chords out;
            for (int q = 3; q < l.k(); ++q) out.emplace_back(1, q);
            return out;
          }};
}

}  // namespace

std::vector<Entry> entries_delta7() {
  std::vector<Entry> out;

  out.push_back({"C7.1", "minimum degree at least 3",
                 [](const Center& c) { return when(c.k() <= 2, "d(v)<=2"); },
                 {min_degree_recipe()}});

  out.push_back({"C7.2", "a 3-vertex lies on no 3-face",
                 [](const Center& c) { return when(c.k() == 3 && c.p.m3 >= 1, "3-vertex, m3>=1"); },
                 {join("join v1 v3", [](const Labeling& l) { return l.tri(1); }, {{1, 3}})}});

  out.push_back({"C7.3", "a 3-vertex lies on at most one 4-face",
                 [](const Center& c) { return when(c.k() == 3 && c.p.m4 >= 2, "3-vertex, m4>=2"); },
                 {join("join v1 v3",
                       [](const Labeling& l) { return l.flen(1) == 4 && l.flen(2) == 4; },
                       {{1, 3}})}});

  out.push_back({"C7.4", "every neighbour of a 3-vertex is a 7(5-)-vertex",
                 [](const Center& c) {
                   return when(c.k() == 3 && c.any(deg_le(6)), "3-vertex with a 6- neighbour");
                 },
                 {join("fan from v1", [](const Labeling& l) { return l.deg(1) <= 6; },
                       {{1, 2}, {1, 3}})}});

  out.push_back({"C7.5", "no 4(4)-vertex",
                 [](const Center& c) { return when(c.p.is(4, 4), "4(4)-vertex"); },
                 {remove_only()}});

  out.push_back({"C7.6", "a 4-vertex has no 5(5)-neighbour",
                 [](const Center& c) {
                   return when(c.k() == 4 && c.any(kd(5, 5)), "4-vertex with a 5(5) neighbour");
                 },
                 {join("join v2 v4",
                       [](const Labeling& l) { return l.p(2).is(5, 5) && l.tri(1) && l.tri(2); },
                       {{2, 4}})}});

  out.push_back(
      {"C7.7", "a 4-vertex on a 3-face has at most one neighbour that is a 4- or 5(4)-vertex",
       [](const Center& c) {
         if (c.k() != 4 || c.p.m3 < 1 || !c.any(deg(4))) return Clause();
         int low = c.count([](const VertexProfile& x) { return x.degree == 4 || x.is(5, 4); });
         return when(low >= 2, "4-vertex, m3>=1, 4-neighbour and another 4 or 5(4)");
       },
       {{"fan from the 4-neighbour v1",
         [](const Labeling& l) {
           if (l.deg(1) != 4) return false;
           for (int j = 2; j <= 4; ++j)
             if (l.deg(j) == 4 || l.p(j).is(5, 4)) return true;
           return false;
         },
         [](const Labeling& l) { return fan_from(l, 1); }}}});

  out.push_back(
      {"C7.8", "a 4(1)-vertex has two 7(6-)-neighbours",
       [](const Center& c) {
         if (!c.p.is(4, 1)) return Clause();
         int a = c.count(kd_le(7, 5)), b = c.count(kd(7, 6));
         if (c.p.m4 == 2 && !(a >= 1 || b >= 2))
           return Clause("4(1)-vertex, m4=2, no 7(5-) and fewer than two 7(6)");
         return when(c.p.m4 == 3 && c.count(kd_le(7, 6)) < 2,
                     "4(1)-vertex, m4=3, fewer than two 7(6-)");
       },
       {join("close the 4-cycle v1 v2 v3 v4",
             [](const Labeling& l) { return l.tri(1) && l.deg(3) <= 6 && l.deg(4) <= 6; },
             {{2, 3}, {3, 4}, {1, 4}}),
        join("join v2 v3 and v1 v4",
             [](const Labeling& l) { return l.tri(1) && l.flen(3) == 4; },
             {{2, 3}, {1, 4}}),
        join("star from v1 on the 3-face",
             [](const Labeling& l) { return l.tri(1) && l.deg(1) <= 6; }, {{1, 3}, {1, 4}})}});

  out.push_back(
      {"C7.9", "a 4(2)-vertex has two 7(6-)-neighbours and two 6(4-)-neighbours",
       [](const Center& c) {
         if (!c.p.is(4, 2)) return Clause();
         int a5 = c.count(kd_le(7, 5)), a6 = c.count(kd_le(7, 6)), l6 = c.count(kd_le(6, 4));
         int b6 = c.count(kd(7, 6));
         if (c.p.m4 == 0 && !((a5 >= 1 && l6 >= 1) || a6 >= 2))
           return Clause("4(2)-vertex, m4=0, neighbours too light");
         if (c.p.m4 == 1 && !((a6 >= 2 && l6 >= 2) || a6 >= 3))
           return Clause("4(2)-vertex, m4=1, neighbours too light");
         return when(c.p.m4 == 2 && !((a5 >= 2 && b6 >= 2) || a5 >= 3),
                     "4(2)-vertex, m4=2, neighbours too light");
       },
       four_two_recipes()});

  out.push_back(
      {"C7.10", "all neighbours of a 4(3)-vertex are 7(5-)-vertices",
       [](const Center& c) {
         if (!c.p.is(4, 3)) return Clause();
         int a5 = c.count(kd_le(7, 5)), b6 = c.count(kd(7, 6)), l6 = c.count(kd_le(6, 4));
         if (c.p.m4 == 0 &&
             !(a5 >= 4 || (a5 >= 3 && b6 >= 1) || (a5 >= 3 && l6 >= 1) || (a5 >= 2 && b6 >= 2)))
           return Clause("4(3)-vertex, m4=0, neighbours too light");
         return when(c.p.m4 == 1 && a5 < 4, "4(3)-vertex, m4=1, a neighbour not 7(5-)");
       },
       {join("join v1 v4", [](const Labeling& l) { return tris(l, 3); }, {{1, 4}})}});

  out.push_back(
      {"C7.11", "neighbourhood of a 5(4)-vertex",
       [](const Center& c) {
         if (!c.p.is(5, 4)) return Clause();
         int n55 = c.count(kd(5, 5)), n4 = c.count(deg(4));
         int heavy = c.count(six_plus_not_full);
         if (n55 >= 2) return Clause("5(4)-vertex with two 5(5)");
         if (n55 >= 1 && n4 >= 1) return Clause("5(4)-vertex with a 5(5) and a 4");
         if (c.any(kd(7, 6)) && n4 >= 2) return Clause("5(4)-vertex with a 7(6) and two 4");
         if (c.p.m4 == 0 && heavy < 2) return Clause("5(4)-vertex, m4=0, fewer than two heavy");
         if (c.p.m4 == 1 && heavy < 3) return Clause("5(4)-vertex, m4=1, fewer than three heavy");
         return when(c.p.m4 == 1 && c.any(kd(7, 7)) && heavy < 4,
                     "5(4)-vertex, m4=1, a 7(7), fewer than four heavy");
       },
       {join("join v1 v5", [](const Labeling& l) { return tris(l, 4); }, {{1, 5}})}});

  out.push_back(
      {"C7.12", "neighbourhood of a 5(5)-vertex",
       [](const Center& c) {
         if (!c.p.is(5, 5)) return Clause();
         int n5 = c.count(deg(5)), n6 = c.count(deg(6)), n7 = c.count(deg(7));
         int l6 = c.count(kd_le(6, 5)), a5 = c.count(kd_le(7, 5));
         int stiff = c.count([](const VertexProfile& x) {
           return (x.degree == 5 && x.m3 >= 4) || x.is(6, 6);
         });
         if (n5 >= 3) return Clause("5(5)-vertex, n5>=3");
         if (stiff >= 2) return Clause("5(5)-vertex, two 5(4+) or 6(6)");
         if (c.count(deg_le(6)) == 5) return Clause("5(5)-vertex, all neighbours 6-");
         if (n6 >= 4 && a5 == 0) return Clause("5(5)-vertex, n6>=4, no 7(5-)");
         if (n5 == 0 && l6 >= 1 && c.any(kd(6, 6)) && !(n7 >= 3 && a5 >= 1))
           return Clause("5(5)-vertex, n5=0, a 6(5-) and a 6(6)");
         if (n5 == 1 && (c.any(kd(6, 6)) || n6 >= 3)) return Clause("5(5)-vertex, n5=1, 6(6) or n6>=3");
         if (n5 == 1 && l6 == 1 && a5 == 0) return Clause("5(5)-vertex, n5=1, one 6(5-), no 7(5-)");
         if (n5 == 1 && l6 == 2 && a5 < 2) return Clause("5(5)-vertex, n5=1, two 6(5-), <2 7(5-)");
         return when(n5 == 2 && a5 < 3, "5(5)-vertex, n5=2, fewer than three 7(5-)");
       },
       {remove_only()}});

  out.push_back(
      {"C7.13", "a 6(5)-vertex has at most four bad 5-neighbours",
       [](const Center& c) {
         if (!c.p.is(6, 5)) return Clause();
         int b5 = c.count(bad5);
         if (b5 >= 5) return Clause("6(5)-vertex, five bad 5");
         return when(c.p.m4 == 1 && b5 >= 4 && c.count(kd_le(7, 5)) <= 1,
                     "6(5)-vertex, m4=1, four bad 5, at most one 7(5-)");
       },
       six_five_recipes(false)});

  out.push_back(
      {"C7.14", "neighbourhood of a 7-vertex",
       [](const Center& c) {
         if (c.k() != 7) return Clause();
         int m3 = c.p.m3, n4 = c.count(deg(4));
         bool sup = c.has_support();
         int wide = c.faces_at_least(5);
         if (sup && c.p.d2 <= 20) return Clause("support neighbour, d2<=20");
         if (m3 >= 4 && m3 <= 5 && n4 == 7) return Clause("4<=m3<=5, n4=7");
         if (m3 != 5) return Clause();
         if (n4 == 4 && sup && c.any(kd(5, 4)) && c.any(kd(5, 5)) && !c.any(deg(7)))
           return Clause("m3=5, n4=4, 5(4) and 5(5), no 7-neighbour");
         if (n4 >= 3 && sup && c.any(deg(3)) && c.count(poor) >= 5)
           return Clause("m3=5, n4>=3, a 3-neighbour, five poor");
         if (n4 == 5) {
           int a = c.count(kd(5, 4));
           if (a >= 2) return Clause("m3=5, n4=5, two 5(4)");
           if ((a >= 1 || c.count(kd(6, 5)) >= 2) && wide < 2)
             return Clause("m3=5, n4=5, fewer than two 5+-faces");
         }
         if (n4 == 6 && (wide < 2 || c.any(bad5)))
           return Clause("m3=5, n4=6, fewer than two 5+-faces or a bad 5");
         return Clause();
       },
       {support_fan()}});

  return out;
}

}  // namespace d2tk::detail
