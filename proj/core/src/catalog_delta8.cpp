#include "catalog_internal.hpp"

namespace d2tk::detail {

namespace {

bool heavy7(const VertexProfile& x) { return x.degree >= 7 && !full(x); }
bool heavy6(const VertexProfile& x) { return x.degree >= 6 && !x.is(6, 6); }

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

std::vector<Entry> entries_delta8() {
  std::vector<Entry> out;

  out.push_back({"C8.1", "minimum degree at least 3",
                 [](const Center& c) { return when(c.k() <= 2, "d(v)<=2"); },
                 {min_degree_recipe()}});

  out.push_back(
      {"C8.2", "a 3-vertex lies on no 3-face and at most one 4-face",
       [](const Center& c) {
         if (c.k() != 3) return Clause();
         if (c.p.m3 >= 1) return Clause("3-vertex, m3>=1");
         return when(c.p.m4 >= 2, "3-vertex, m4>=2");
       },
       {join("join v1 v3 across a 3-face", [](const Labeling& l) { return l.tri(1); }, {{1, 3}}),
        join("join v1 v3 across two 4-faces",
             [](const Labeling& l) { return l.flen(1) == 4 && l.flen(2) == 4; }, {{1, 3}})}});

  out.push_back(
      {"C8.3", "neighbours of a 3-vertex",
       [](const Center& c) {
         if (c.k() != 3) return Clause();
         if (c.any(deg_le(6))) return Clause("3-vertex with a 6- neighbour");
         int a = c.count(kd_le(8, 6));
         if (c.p.m3 == 0 && c.p.m4 == 0 && a < 2) return Clause("3-vertex, m4=0, fewer than two 8(6-)");
         return when(c.p.m3 == 0 && c.p.m4 == 1 && a < 3, "3-vertex, m4=1, fewer than three 8(6-)");
       },
       {join("fan from v1", [](const Labeling& l) { return l.deg(1) <= 7; }, {{1, 2}, {1, 3}})}});

  out.push_back(
      {"C8.4", "a 4-vertex on a 3-face has at most one 5--neighbour",
       [](const Center& c) {
         if (c.k() != 4 || c.p.m3 < 1) return Clause();
         if (c.p.m3 == 1 && c.count(deg(4)) >= 2) return Clause("4(1)-vertex, two 4-neighbours");
         if (c.p.m3 == 2 && c.count(deg_le(5)) >= 2) return Clause("4(2)-vertex, two 5- neighbours");
         return when(c.p.m3 >= 3 && c.any([](const VertexProfile& x) {
           return x.degree == 4 || (x.degree == 5 && x.m3 >= 4);
         }),
                     "4(3+)-vertex with a 4 or 5(4+) neighbour");
       },
       {{"fan from a 5- neighbour v1", [](const Labeling& l) { return l.deg(1) <= 5; },
         [](const Labeling& l) { return fan_from(l, 1); }}}});

  out.push_back(
      {"C8.5", "a 4(1)-vertex with m4>=2 has two 7+-neighbours",
       [](const Center& c) {
         return when(c.p.is(4, 1) && c.p.m4 >= 2 && c.count(deg_ge(7)) <= 1,
                     "4(1)-vertex, m4>=2, at most one 7+");
       },
       {join("fan from v1 on the 3-face",
             [](const Labeling& l) { return l.tri(1) && l.deg(1) <= 6; }, {{1, 3}, {1, 4}})}});

  out.push_back(
      {"C8.6", "neighbours of a 4(2)-vertex",
       [](const Center& c) {
         if (!c.p.is(4, 2)) return Clause();
         int h = c.count(heavy7), e7 = c.count(kd_le(8, 7)), s6 = c.count(kd_le(7, 6));
         if (c.p.m4 == 0 && h < 2) return Clause("4(2)-vertex, m4=0, fewer than two heavy 7+");
         if (c.p.m4 == 1 && !(e7 >= 2 || h >= 3)) return Clause("4(2)-vertex, m4=1, neighbours too light");
         return when(c.p.m4 == 2 && !((e7 >= 1 && s6 >= 3) || (e7 >= 2 && s6 >= 1) || e7 >= 3),
                     "4(2)-vertex, m4=2, neighbours too light");
       },
       four_two_recipes()});

  out.push_back(
      {"C8.7", "neighbours of a 4(3)-vertex",
       [](const Center& c) {
         if (!c.p.is(4, 3)) return Clause();
         int e7 = c.count(kd_le(8, 7)), s6 = c.count(kd_le(7, 6)), f8 = c.count(kd(8, 8));
         if (c.p.m4 == 0 &&
             !((e7 >= 1 && s6 >= 3) || (e7 >= 2 && s6 >= 1) || (e7 >= 2 && f8 >= 2) || e7 >= 3))
           return Clause("4(3)-vertex, m4=0, neighbours too light");
         return when(c.p.m4 == 1 && !((e7 >= 2 && s6 >= 2) || e7 >= 3),
                     "4(3)-vertex, m4=1, neighbours too light");
       },
       {join("join v1 v4", [](const Labeling& l) { return tris(l, 3); }, {{1, 4}})}});

  out.push_back(
      {"C8.8", "neighbours of a 4(4)-vertex",
       [](const Center& c) {
         if (!c.p.is(4, 4)) return Clause();
         int e7 = c.count(kd_le(8, 7));
         return when(!((e7 >= 3 && c.any(kd_le(7, 5))) || e7 >= 4), "4(4)-vertex, neighbours too light");
       },
       {remove_only()}});

  out.push_back(
      {"C8.9", "a 5(4)-vertex has enough 6+-neighbours that are not 6(6)",
       [](const Center& c) {
         if (!c.p.is(5, 4)) return Clause();
         int h = c.count(heavy6);
         if (c.p.m4 == 0 && h < 2) return Clause("5(4)-vertex, m4=0, fewer than two heavy 6+");
         return when(c.p.m4 == 1 && h < 3, "5(4)-vertex, m4=1, fewer than three heavy 6+");
       },
       {join("join v1 v5", [](const Labeling& l) { return tris(l, 4); }, {{1, 5}})}});

  out.push_back(
      {"C8.10", "a 5(5)-vertex has at most one 4- or 5(5)-neighbour",
       [](const Center& c) {
         if (!c.p.is(5, 5)) return Clause();
         if (c.any(kd(5, 5)) && (c.any(deg(4)) || c.any(kd(5, 4))))
           return Clause("5(5)-vertex, a 5(5) and a 4 or 5(4)");
         int low = c.count([](const VertexProfile& x) { return x.degree == 4 || x.is(5, 5); });
         return when(low >= 2, "5(5)-vertex, two 4 or 5(5)");
       },
       {remove_only()}});

  out.push_back(
      {"C8.11", "a 5(5)-vertex has three 7+-neighbours that are not 7(7)",
       [](const Center& c) {
         if (!c.p.is(5, 5)) return Clause();
         int n4 = c.count(deg(4)), n5 = c.count(deg(5));
         int h7 = c.count([](const VertexProfile& x) { return x.degree >= 7 && !x.is(7, 7); });
         int h6 = c.count(heavy6), e7 = c.count(kd_le(8, 7)), l6 = c.count(kd_le(6, 5));
         if (n4 == 1 && h7 < 3) return Clause("5(5)-vertex, n4=1, fewer than three heavy 7+");
         if (n4 == 0 && n5 == 0 && !(e7 >= 3 || (h6 >= 4 && h7 >= 2)))
           return Clause("5(5)-vertex, n4=n5=0, neighbours too light");
         if (n4 == 0 && n5 == 1 && !(h7 >= 3 || (l6 >= 2 && h7 >= 2)))
           return Clause("5(5)-vertex, n5=1, neighbours too light");
         return when(n4 == 0 && n5 == 2 && h7 < 3, "5(5)-vertex, n5=2, fewer than three heavy 7+");
       },
       {remove_only()}});

  out.push_back(
      {"C8.12", "a 6(5)-vertex has at most four 5(4+)-neighbours",
       [](const Center& c) {
         if (!c.p.is(6, 5)) return Clause();
         int b = c.count(kd_ge(5, 4));
         if (b >= 5) return Clause("6(5)-vertex, five 5(4+)");
         return when(c.p.m4 == 1 && b >= 4 && c.count(kd_le(8, 6)) <= 1,
                     "6(5)-vertex, m4=1, four 5(4+), at most one 8(6-)");
       },
       six_five_recipes(false)});

  out.push_back(
      {"C8.13", "neighbourhood of a 7+-vertex",
       [](const Center& c) {
         if (c.k() < 7) return Clause();
         bool sup = c.has_support();
         if (sup && c.p.d2 <= 22) return Clause("support neighbour, d2<=22");
         int n4 = c.count(deg(4)), n55 = c.count(kd(5, 5));
         int low = c.count([](const VertexProfile& x) { return x.degree == 4 || x.is(5, 4); });
         if (c.p.is(7, 6)) {
           if (c.count(kd_ge(4, 1)) >= 5 && c.any(deg(5))) return Clause("7(6), five 4(1+), a 5");
           if (n55 >= 1 && low >= 5) return Clause("7(6), a 5(5), five 4 or 5(4)");
           if (n55 >= 2 && low >= 4) return Clause("7(6), two 5(5), four 4 or 5(4)");
           if (n55 >= 3 && (n4 >= 2 || low >= 3)) return Clause("7(6), three 5(5), too many 4 or 5(4)");
         }
         if (c.p.is(7, 7) && c.count(kd_ge(5, 4)) >= 6) return Clause("7(7), six 5(4+)");
         if (c.p.is(8, 7) && sup &&
             c.count([](const VertexProfile& x) {
               return (x.degree == 4 && x.m3 <= 2) || x.is(5, 5);
             }) >= 7)
           return Clause("8(7), support neighbour, seven 4(2-) or 5(5)");
         return Clause();
       },
       {support_fan()}});

  return out;
}

}  // namespace d2tk::detail
