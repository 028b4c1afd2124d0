#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "webcalc/reduce.hpp"
#include "webcalc/threads.hpp"

namespace webcalc {

namespace {

Obj ob1(int c, int x) { return Obj{{c, x}}; }
Obj ob2(int c1, int x1, int c2, int x2) { return Obj{{c1, x1}, {c2, x2}}; }

AlgebraElement belem(int b) { return SparseVec::unit(b, Rat(1)); }

AlgebraElement idem_elem(const GoodPair& p, int color) {
  return belem(p.idems[color]);
}

// Parameter strings are the instance's identity: verify_relation matches them
// verbatim, so the key order here is frozen.
struct ParamStr {
  std::ostringstream os;
  bool first = true;
  ParamStr& kv(const char* k, long v) {
    if (!first) os << " ";
    first = false;
    os << k << "=" << v;
    return *this;
  }
  ParamStr& kv(const char* k, const std::string& v) {
    if (!first) os << " ";
    first = false;
    os << k << "=" << v;
    return *this;
  }
  std::string str() const { return os.str(); }
};

void push(std::vector<RelationInstance>& out, const std::string& id,
          const ParamStr& ps, WebMorphism lhs, WebMorphism rhs) {
  out.push_back({id, ps.str(), std::move(lhs), std::move(rhs)});
}

Rat rat_pow(const Rat& a, int e) {
  Rat r(1);
  for (int k = 0; k < e; ++k) r *= a;
  return r;
}

// Ladder rungs on a two-strand object (i^a, i^b). The left rung moves r
// through a merge on the left strand, the right rung moves s the other way;
// out-of-range labels give the zero morphism, matching the thickness
// conventions of the generators.
WebMorphism rungL(int i, int a, int b, int r) {
  Obj dom = ob2(i, a, i, b);
  if (a < 0 || b < 0 || r < 0 || r > b) return wm_zero(dom, dom);
  return compose(tensor(wm_merge(i, a, r), wm_id(ob1(i, b - r))),
                 tensor(wm_id(ob1(i, a)), wm_split(i, r, b - r)));
}

WebMorphism rungR(int i, int a, int b, int s) {
  Obj dom = ob2(i, a, i, b);
  if (a < 0 || b < 0 || s < 0 || s > a) return wm_zero(dom, dom);
  return compose(tensor(wm_id(ob1(i, a - s)), wm_merge(i, s, b)),
                 tensor(wm_split(i, a - s, s), wm_id(ob1(i, b))));
}

// Rungs acting on strands (1,2) or (2,3) of a three-strand object whose
// current thicknesses are (a,b,c).
WebMorphism rung12(int i, int a, int b, int c, int r, bool left) {
  WebMorphism rung = left ? rungL(i, a, b, r) : rungR(i, a, b, r);
  return tensor(rung, wm_id(ob1(i, c)));
}

WebMorphism rung23(int i, int a, int b, int c, int r, bool left) {
  WebMorphism rung = left ? rungL(i, b, c, r) : rungR(i, b, c, r);
  return tensor(wm_id(ob1(i, a)), rung);
}

// The four split/merge/crossing slide identities on strands of thickness
// a, b (color ci) and c (color cc). The same shapes serve the distinct-color
// intertwining relations, their arbitrary-color extensions, and the
// monochrome lemma.
std::pair<WebMorphism, WebMorphism> smc_sides(int shape, int ci, int a, int b,
                                              int cc, int c) {
  Obj A = ob1(ci, a), B = ob1(ci, b), C = ob1(cc, c);
  switch (shape) {
    case 1:  // merge slides down through the crossing; crosser from the left
      return {compose(tensor(wm_merge(ci, a, b), wm_id(C)),
                      compose(tensor(wm_id(A), wm_cross(cc, c, ci, b)),
                              tensor(wm_cross(cc, c, ci, a), wm_id(B)))),
              compose(wm_cross(cc, c, ci, a + b),
                      tensor(wm_id(C), wm_merge(ci, a, b)))};
    case 2:  // merge slides down; crosser from the right
      return {compose(tensor(wm_id(C), wm_merge(ci, a, b)),
                      compose(tensor(wm_cross(ci, a, cc, c), wm_id(B)),
                              tensor(wm_id(A), wm_cross(ci, b, cc, c)))),
              compose(wm_cross(ci, a + b, cc, c),
                      tensor(wm_merge(ci, a, b), wm_id(C)))};
    case 3:  // split slides up; crosser from the right
      return {compose(tensor(wm_cross(ci, a, cc, c), wm_id(B)),
                      compose(tensor(wm_id(A), wm_cross(ci, b, cc, c)),
                              tensor(wm_split(ci, a, b), wm_id(C)))),
              compose(tensor(wm_id(C), wm_split(ci, a, b)),
                      wm_cross(ci, a + b, cc, c))};
    case 4:  // split slides up; crosser from the left
      return {compose(tensor(wm_id(A), wm_cross(cc, c, ci, b)),
                      compose(tensor(wm_cross(cc, c, ci, a), wm_id(B)),
                              tensor(wm_id(C), wm_split(ci, a, b)))),
              compose(tensor(wm_split(ci, a, b), wm_id(C)),
                      wm_cross(cc, c, ci, a + b))};
  }
  throw std::logic_error("bad slide shape");
}

std::pair<WebMorphism, WebMorphism> braid_sides(int c1, int x1, int c2, int x2,
                                                int c3, int x3) {
  Obj S1 = ob1(c1, x1), S2 = ob1(c2, x2), S3 = ob1(c3, x3);
  WebMorphism lhs =
      compose(tensor(wm_cross(c2, x2, c3, x3), wm_id(S1)),
              compose(tensor(wm_id(S2), wm_cross(c1, x1, c3, x3)),
                      tensor(wm_cross(c1, x1, c2, x2), wm_id(S3))));
  WebMorphism rhs =
      compose(tensor(wm_id(S3), wm_cross(c1, x1, c2, x2)),
              compose(tensor(wm_cross(c1, x1, c3, x3), wm_id(S2)),
                      tensor(wm_id(S1), wm_cross(c2, x2, c3, x3))));
  return {std::move(lhs), std::move(rhs)};
}

using Out = std::vector<RelationInstance>;

void build_assoc_split(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int x = 0; x <= bound; ++x)
      for (int y = 0; y <= bound; ++y)
        for (int z = 0; z <= bound; ++z)
          push(out, "assoc-split",
               ParamStr().kv("i", i).kv("x", x).kv("y", y).kv("z", z),
               compose(tensor(wm_split(i, x, y), wm_id(ob1(i, z))),
                       wm_split(i, x + y, z)),
               compose(tensor(wm_id(ob1(i, x)), wm_split(i, y, z)),
                       wm_split(i, x, y + z)));
}

void build_assoc_merge(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int x = 0; x <= bound; ++x)
      for (int y = 0; y <= bound; ++y)
        for (int z = 0; z <= bound; ++z)
          push(out, "assoc-merge",
               ParamStr().kv("i", i).kv("x", x).kv("y", y).kv("z", z),
               compose(wm_merge(i, x + y, z),
                       tensor(wm_merge(i, x, y), wm_id(ob1(i, z)))),
               compose(wm_merge(i, x, y + z),
                       tensor(wm_id(ob1(i, x)), wm_merge(i, y, z))));
}

void build_merge_split(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int x = 0; x <= bound; ++x)
      for (int y = 0; y <= bound; ++y)
        for (int z = 0; z <= bound; ++z) {
          int w = x + y - z;
          if (w < 0 || w > bound) continue;
          WebMorphism lhs = compose(wm_split(i, z, w), wm_merge(i, x, y));
          WebMorphism rhs = wm_zero(ob2(i, x, i, y), ob2(i, z, i, w));
          for (int t = std::max(0, x - z); t <= std::min(x, w); ++t) {
            WebMorphism b1 =
                tensor(wm_split(i, x - t, t), wm_split(i, z - x + t, w - t));
            WebMorphism b2 = whisker(ob1(i, x - t),
                                     wm_cross(i, t, i, z - x + t),
                                     ob1(i, w - t));
            WebMorphism b3 =
                tensor(wm_merge(i, x - t, z - x + t), wm_merge(i, t, w - t));
            rhs = wm_add(rhs, compose(b3, compose(b2, b1)));
          }
          push(out, "merge-split",
               ParamStr().kv("i", i).kv("x", x).kv("y", y).kv("z", z).kv("w",
                                                                         w),
               std::move(lhs), std::move(rhs));
        }
}

void build_knothole(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int x = 0; x <= bound; ++x)
      for (int y = 0; y <= bound; ++y)
        push(out, "knothole", ParamStr().kv("i", i).kv("x", x).kv("y", y),
             compose(wm_merge(i, x, y), wm_split(i, x, y)),
             wm_scale(Rat(binom(x + y, x)), wm_id(ob1(i, x + y))));
}

void build_cox_inverse(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int j = 0; j < p.colors(); ++j) {
      if (i == j) continue;
      for (int x = 0; x <= bound; ++x)
        for (int y = 0; y <= bound; ++y)
          push(out, "cox-inverse",
               ParamStr().kv("i", i).kv("j", j).kv("x", x).kv("y", y),
               compose(wm_cross(j, y, i, x), wm_cross(i, x, j, y)),
               wm_id(ob2(i, x, j, y)));
    }
}

void braid_family(const GoodPair& p, int bound, const char* id, bool distinct,
                  bool same, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int j = 0; j < p.colors(); ++j)
      for (int k = 0; k < p.colors(); ++k) {
        if (distinct && (i == j || j == k || i == k)) continue;
        if (same && !(i == j && j == k)) continue;
        for (int x = 0; x <= bound; ++x)
          for (int y = 0; y <= bound; ++y)
            for (int z = 0; z <= bound; ++z) {
              auto [lhs, rhs] = braid_sides(i, x, j, y, k, z);
              push(out, id,
                   ParamStr().kv("i", i).kv("j", j).kv("k", k).kv("x", x).kv(
                       "y", y).kv("z", z),
                   std::move(lhs), std::move(rhs));
            }
      }
}

// shape: the slide identity variant; colors (i, j) with j crossing.
void slide_family(const GoodPair& p, int bound, const char* id, int shape,
                  bool distinct_only, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int j = 0; j < p.colors(); ++j) {
      if (distinct_only && i == j) continue;
      for (int x = 0; x <= bound; ++x)
        for (int y = 0; y <= bound; ++y)
          for (int z = 0; z <= bound; ++z) {
            auto [lhs, rhs] = smc_sides(shape, i, x, y, j, z);
            push(out, id,
                 ParamStr().kv("i", i).kv("j", j).kv("x", x).kv("y", y).kv("z",
                                                                           z),
                 std::move(lhs), std::move(rhs));
          }
    }
}

void build_coupon_idempotent(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int x = 0; x <= bound; ++x)
      push(out, "coupon-idempotent", ParamStr().kv("i", i).kv("x", x),
           wm_coupon(p, idem_elem(p, i), i, x, i), wm_id(ob1(i, x)));
}

// Basis elements legal as coupon content at thickness x.
std::vector<int> coupon_basis(const GoodPair& p, int x) {
  std::vector<int> bs;
  for (int b = 0; b < p.dim(); ++b)
    if (x < 2 || p.basis[b].in_sub) bs.push_back(b);
  return bs;
}

void build_coupon_scalar(const GoodPair& p, int bound, Out& out) {
  const Rat alphas[] = {rat(2), rat(-1, 3)};
  for (int x = 0; x <= bound; ++x)
    for (int b : coupon_basis(p, x)) {
      int ci = p.color_of(p.basis[b].right);
      int cj = p.color_of(p.basis[b].left);
      for (const Rat& alpha : alphas) {
        AlgebraElement scaled = SparseVec::unit(b, alpha);
        push(out, "coupon-scalar",
             ParamStr().kv("f", p.basis[b].id).kv("x", x).kv("alpha",
                                                             rat_str(alpha)),
             wm_coupon(p, scaled, ci, x, cj),
             wm_scale(rat_pow(alpha, x),
                      wm_coupon(p, belem(b), ci, x, cj)));
      }
    }
}

void build_coupon_mult(const GoodPair& p, int bound, Out& out) {
  for (int x = 0; x <= bound; ++x)
    for (int f : coupon_basis(p, x))
      for (int h : coupon_basis(p, x)) {
        if (p.basis[h].right != p.basis[f].left) continue;
        int ci = p.color_of(p.basis[f].right);
        int cj = p.color_of(p.basis[f].left);
        int cl = p.color_of(p.basis[h].left);
        push(out, "coupon-mult",
             ParamStr().kv("h", p.basis[h].id).kv("f", p.basis[f].id).kv("x",
                                                                         x),
             compose(wm_coupon(p, belem(h), cj, x, cl),
                     wm_coupon(p, belem(f), ci, x, cj)),
             wm_coupon(p, p.basis_prod(h, f), ci, x, cl));
      }
}

void build_coupon_sum(const GoodPair& p, int bound, Out& out) {
  for (int x = 0; x <= bound; ++x)
    for (int f : coupon_basis(p, x))
      for (int g : coupon_basis(p, x)) {
        if (p.basis[f].left != p.basis[g].left ||
            p.basis[f].right != p.basis[g].right)
          continue;
        int ci = p.color_of(p.basis[f].right);
        int cj = p.color_of(p.basis[f].left);
        AlgebraElement sum = belem(f);
        sum.axpy(Rat(1), belem(g));
        WebMorphism rhs = wm_zero(ob1(ci, x), ob1(cj, x));
        for (int t = 0; t <= x; ++t)
          rhs = wm_add(
              rhs,
              compose(wm_merge(cj, t, x - t),
                      compose(tensor(wm_coupon(p, belem(f), ci, t, cj),
                                     wm_coupon(p, belem(g), ci, x - t, cj)),
                              wm_split(ci, t, x - t))));
        push(out, "coupon-sum",
             ParamStr().kv("f", p.basis[f].id).kv("g", p.basis[g].id).kv("x",
                                                                         x),
             wm_coupon(p, sum, ci, x, cj), std::move(rhs));
      }
}

void build_odd_knothole(const GoodPair& p, int bound, Out& out) {
  (void)bound;
  for (int b = 0; b < p.dim(); ++b) {
    if (!p.basis[b].parity) continue;
    int ci = p.color_of(p.basis[b].right);
    int cj = p.color_of(p.basis[b].left);
    WebMorphism cf = wm_coupon(p, belem(b), ci, 1, cj);
    push(out, "odd-knothole", ParamStr().kv("f", p.basis[b].id),
         compose(wm_merge(cj, 1, 1),
                 compose(tensor(cf, cf), wm_split(ci, 1, 1))),
         wm_zero(ob1(ci, 2), ob1(cj, 2)));
  }
}

void build_thick_coupon(const GoodPair& p, int bound, bool split_form,
                        Out& out) {
  for (int b = 0; b < p.dim(); ++b) {
    if (!p.basis[b].in_sub) continue;
    int ci = p.color_of(p.basis[b].right);
    int cj = p.color_of(p.basis[b].left);
    for (int x = 0; x <= bound; ++x)
      for (int y = 0; y <= bound; ++y) {
        WebMorphism cx = wm_coupon(p, belem(b), ci, x, cj);
        WebMorphism cy = wm_coupon(p, belem(b), ci, y, cj);
        WebMorphism whole = wm_coupon(p, belem(b), ci, x + y, cj);
        ParamStr ps;
        ps.kv("f", p.basis[b].id).kv("x", x).kv("y", y);
        if (split_form)
          push(out, "thick-coupon-split", ps,
               compose(wm_split(cj, x, y), whole),
               compose(tensor(cx, cy), wm_split(ci, x, y)));
        else
          push(out, "thick-coupon-merge", ps,
               compose(whole, wm_merge(ci, x, y)),
               compose(wm_merge(cj, x, y), tensor(cx, cy)));
      }
  }
}

void build_coupon_intertwine(const GoodPair& p, int bound, int form,
                             Out& out) {
  for (int x = 0; x <= bound; ++x)
    for (int b : coupon_basis(p, x)) {
      int ci = p.color_of(p.basis[b].right);
      int cj = p.color_of(p.basis[b].left);
      for (int k = 0; k < p.colors(); ++k)
        for (int y = 0; y <= bound; ++y) {
          WebMorphism cf = wm_coupon(p, belem(b), ci, x, cj);
          Obj K = ob1(k, y);
          WebMorphism lhs, rhs;
          if (form == 1) {
            lhs = compose(wm_cross(cj, x, k, y), tensor(cf, wm_id(K)));
            rhs = compose(tensor(wm_id(K), cf), wm_cross(ci, x, k, y));
          } else {
            lhs = compose(wm_cross(k, y, cj, x), tensor(wm_id(K), cf));
            rhs = compose(tensor(cf, wm_id(K)), wm_cross(k, y, ci, x));
          }
          push(out,
               form == 1 ? "coupon-intertwine-1" : "coupon-intertwine-2",
               ParamStr().kv("f", p.basis[b].id).kv("x", x).kv("k", k).kv("y",
                                                                          y),
               std::move(lhs), std::move(rhs));
        }
    }
}

void build_diag_switch(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int x = 0; x <= bound; ++x)
      for (int y = 0; y <= bound; ++y)
        for (int r = 0; r <= bound; ++r)
          for (int s = 0; s <= bound; ++s) {
            WebMorphism lhs =
                compose(rungL(i, x - s, y + s, r), rungR(i, x, y, s));
            WebMorphism rhs = wm_zero(ob2(i, x, i, y), ob2(i, x, i, y));
            for (int t = 0; t <= std::min(r, s); ++t)
              rhs = wm_add(
                  rhs,
                  wm_scale(Rat(gbinom(x - y + r - s, t)),
                           compose(rungR(i, x + r - t, y - r + t, s - t),
                                   rungL(i, x, y, r - t))));
            push(out, "diag-switch",
                 ParamStr().kv("i", i).kv("x", x).kv("y", y).kv("r", r).kv(
                     "s", s),
                 std::move(lhs), std::move(rhs));
          }
}

void build_crossing_web(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int x = 0; x <= bound; ++x)
      for (int y = 0; y <= bound; ++y) {
        WebMorphism rhs = wm_zero(ob2(i, x, i, y), ob2(i, y, i, x));
        for (int t = 0; t <= std::min(x, y); ++t)
          rhs = wm_add(rhs,
                       wm_scale(Rat((t & 1) ? -1 : 1),
                                compose(rungL(i, t, x + y - t, y - t),
                                        rungR(i, x, y, x - t))));
        push(out, "crossing-web", ParamStr().kv("i", i).kv("x", x).kv("y", y),
             wm_cross(i, x, i, y), std::move(rhs));
      }
}

void build_rev_diag_switch(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b)
        for (int r = 0; r <= bound; ++r)
          for (int s = 0; s <= bound; ++s) {
            WebMorphism lhs =
                compose(rungR(i, a + r, b - r, s), rungL(i, a, b, r));
            WebMorphism rhs = wm_zero(ob2(i, a, i, b), ob2(i, a, i, b));
            for (int t = 0; t <= std::min(r, s); ++t)
              rhs = wm_add(
                  rhs,
                  wm_scale(Rat(gbinom(-a + b - r + s, t)),
                           compose(rungL(i, a - s + t, b + s - t, r - t),
                                   rungR(i, a, b, s - t))));
            push(out, "rev-diag-switch",
                 ParamStr().kv("i", i).kv("a", a).kv("b", b).kv("r", r).kv(
                     "s", s),
                 std::move(lhs), std::move(rhs));
          }
}

void build_coxeter_web(const GoodPair& p, int bound, bool right_form,
                       Out& out) {
  const char* id = right_form ? "coxeter-web-1" : "coxeter-web-2";
  for (int i = 0; i < p.colors(); ++i)
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b)
        for (int c = 0; c <= bound; ++c)
          for (int s = 0; s <= bound; ++s)
            for (int s1 = 0; s1 <= bound; ++s1)
              for (int s2 = 0; s2 <= bound; ++s2) {
                // Right form moves thickness leftward twice on strands
                // (1,2); the mirrored form uses left rungs. Objects track
                // the running thicknesses.
                bool L = !right_form;
                int d1 = L ? 1 : -1;
                WebMorphism m1 = rung12(i, a, b, c, s, L);
                WebMorphism m2 =
                    rung23(i, a + d1 * s, b - d1 * s, c, s1, L);
                WebMorphism m3 = rung12(i, a + d1 * s, b - d1 * s + d1 * s1,
                                        c - d1 * s1, s2, L);
                WebMorphism lhs = compose(m3, compose(m2, m1));
                WebMorphism rhs =
                    wm_zero(Obj{{i, a}, {i, b}, {i, c}},
                            Obj{{i, a}, {i, b}, {i, c}});
                for (int t = 0; t <= s2; ++t) {
                  WebMorphism b1 = rung23(i, a, b, c, s2 - t, L);
                  WebMorphism b2 = rung12(i, a, b + d1 * (s2 - t),
                                          c - d1 * (s2 - t), s + s2, L);
                  WebMorphism b3 =
                      rung23(i, a + d1 * (s + s2),
                             b + d1 * (s2 - t) - d1 * (s + s2),
                             c - d1 * (s2 - t), s1 - s2 + t, L);
                  rhs = wm_add(rhs,
                               wm_scale(Rat(gbinom(s - s1 + s2, t)),
                                        compose(b3, compose(b2, b1))));
                }
                push(out, id,
                     ParamStr().kv("i", i).kv("a", a).kv("b", b).kv("c", c)
                         .kv("s", s).kv("s'", s1).kv("s''", s2),
                     std::move(lhs), std::move(rhs));
              }
}

void build_cross_absorb(const GoodPair& p, int bound, bool merge_form,
                        Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b) {
        ParamStr ps;
        ps.kv("i", i).kv("a", a).kv("b", b);
        if (merge_form)
          push(out, "cross-absorb-merge", ps,
               compose(wm_merge(i, b, a), wm_cross(i, a, i, b)),
               wm_merge(i, a, b));
        else
          push(out, "cross-absorb-split", ps,
               compose(wm_cross(i, b, i, a), wm_split(i, b, a)),
               wm_split(i, a, b));
      }
}

void build_double_cross(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b)
        push(out, "double-cross", ParamStr().kv("i", i).kv("a", a).kv("b", b),
             compose(wm_cross(i, b, i, a), wm_cross(i, a, i, b)),
             wm_id(ob2(i, a, i, b)));
}

void build_arbcol_inverse(const GoodPair& p, int bound, Out& out) {
  for (int i = 0; i < p.colors(); ++i)
    for (int j = 0; j < p.colors(); ++j)
      for (int x = 0; x <= bound; ++x)
        for (int y = 0; y <= bound; ++y)
          push(out, "arbcol-inverse",
               ParamStr().kv("i", i).kv("j", j).kv("x", x).kv("y", y),
               compose(wm_cross(j, y, i, x), wm_cross(i, x, j, y)),
               wm_id(ob2(i, x, j, y)));
}

struct RegEntry {
  const char* id;
  bool defining;
  void (*build)(const GoodPair&, int, Out&);
};

void b_smc1(const GoodPair& p, int bound, Out& o) {
  slide_family(p, bound, "split-merge-cross-1", 1, false, o);
}
void b_smc2(const GoodPair& p, int bound, Out& o) {
  slide_family(p, bound, "split-merge-cross-2", 2, false, o);
}
void b_smc3(const GoodPair& p, int bound, Out& o) {
  slide_family(p, bound, "split-merge-cross-3", 3, false, o);
}
void b_smc4(const GoodPair& p, int bound, Out& o) {
  slide_family(p, bound, "split-merge-cross-4", 4, false, o);
}

const RegEntry kRegistry[] = {
    {"assoc-split", true, build_assoc_split},
    {"assoc-merge", true, build_assoc_merge},
    {"merge-split", true, build_merge_split},
    {"knothole", true, build_knothole},
    {"cox-inverse", true, build_cox_inverse},
    {"cox-braid", true,
     [](const GoodPair& p, int bound, Out& o) {
       braid_family(p, bound, "cox-braid", true, false, o);
     }},
    {"split-intertwine-1", true,
     [](const GoodPair& p, int bound, Out& o) {
       slide_family(p, bound, "split-intertwine-1", 3, true, o);
     }},
    {"split-intertwine-2", true,
     [](const GoodPair& p, int bound, Out& o) {
       slide_family(p, bound, "split-intertwine-2", 4, true, o);
     }},
    {"merge-intertwine-1", true,
     [](const GoodPair& p, int bound, Out& o) {
       slide_family(p, bound, "merge-intertwine-1", 1, true, o);
     }},
    {"merge-intertwine-2", true,
     [](const GoodPair& p, int bound, Out& o) {
       slide_family(p, bound, "merge-intertwine-2", 2, true, o);
     }},
    {"coupon-idempotent", true, build_coupon_idempotent},
    {"coupon-scalar", true, build_coupon_scalar},
    {"coupon-mult", true, build_coupon_mult},
    {"coupon-sum", true, build_coupon_sum},
    {"odd-knothole", true, build_odd_knothole},
    {"thick-coupon-split", true,
     [](const GoodPair& p, int bound, Out& o) {
       build_thick_coupon(p, bound, true, o);
     }},
    {"thick-coupon-merge", true,
     [](const GoodPair& p, int bound, Out& o) {
       build_thick_coupon(p, bound, false, o);
     }},
    {"coupon-intertwine-1", true,
     [](const GoodPair& p, int bound, Out& o) {
       build_coupon_intertwine(p, bound, 1, o);
     }},
    {"coupon-intertwine-2", true,
     [](const GoodPair& p, int bound, Out& o) {
       build_coupon_intertwine(p, bound, 2, o);
     }},
    {"diag-switch", true, build_diag_switch},
    {"crossing-web", true, build_crossing_web},
    {"rev-diag-switch", false, build_rev_diag_switch},
    {"coxeter-web-1", false,
     [](const GoodPair& p, int bound, Out& o) {
       build_coxeter_web(p, bound, true, o);
     }},
    {"coxeter-web-2", false,
     [](const GoodPair& p, int bound, Out& o) {
       build_coxeter_web(p, bound, false, o);
     }},
    {"cross-absorb-merge", false,
     [](const GoodPair& p, int bound, Out& o) {
       build_cross_absorb(p, bound, true, o);
     }},
    {"cross-absorb-split", false,
     [](const GoodPair& p, int bound, Out& o) {
       build_cross_absorb(p, bound, false, o);
     }},
    {"double-cross", false, build_double_cross},
    {"split-merge-cross-1", false, b_smc1},
    {"split-merge-cross-2", false, b_smc2},
    {"split-merge-cross-3", false, b_smc3},
    {"split-merge-cross-4", false, b_smc4},
    {"braid-cox", false,
     [](const GoodPair& p, int bound, Out& o) {
       braid_family(p, bound, "braid-cox", false, true, o);
     }},
    {"arbcol-inverse", false, build_arbcol_inverse},
    {"arbcol-braid", false,
     [](const GoodPair& p, int bound, Out& o) {
       braid_family(p, bound, "arbcol-braid", false, false, o);
     }},
    {"arbcol-split-intertwine-1", false,
     [](const GoodPair& p, int bound, Out& o) {
       slide_family(p, bound, "arbcol-split-intertwine-1", 3, false, o);
     }},
    {"arbcol-split-intertwine-2", false,
     [](const GoodPair& p, int bound, Out& o) {
       slide_family(p, bound, "arbcol-split-intertwine-2", 4, false, o);
     }},
    {"arbcol-merge-intertwine-1", false,
     [](const GoodPair& p, int bound, Out& o) {
       slide_family(p, bound, "arbcol-merge-intertwine-1", 1, false, o);
     }},
    {"arbcol-merge-intertwine-2", false,
     [](const GoodPair& p, int bound, Out& o) {
       slide_family(p, bound, "arbcol-merge-intertwine-2", 2, false, o);
     }},
};

}  // namespace

std::vector<std::string> relation_ids(const std::string& set) {
  if (set != "defining" && set != "implied" && set != "all")
    throw std::invalid_argument("unknown relation set: " + set);
  std::vector<std::string> ids;
  for (const RegEntry& e : kRegistry) {
    if (set == "defining" && !e.defining) continue;
    if (set == "implied" && e.defining) continue;
    ids.push_back(e.id);
  }
  return ids;
}

std::vector<RelationInstance> relation_instances(const GoodPair& pair,
                                                 const std::string& relation_id,
                                                 int bound) {
  for (const RegEntry& e : kRegistry)
    if (relation_id == e.id) {
      Out out;
      e.build(pair, bound, out);
      return out;
    }
  throw std::invalid_argument("unknown relation id: " + relation_id);
}

Verdict verify_instance(Evaluator& ev, const RelationInstance& inst) {
  const WebMorphism& a = inst.lhs;
  const WebMorphism& b = inst.rhs;
  // Zero morphisms carry only nominal endpoints, so compare content first.
  if (a.is_zero() && b.is_zero()) return {true, ""};
  if (a.is_zero() || b.is_zero()) {
    const WebMorphism& nz = a.is_zero() ? b : a;
    CompiledMorphism cm = ev.compile(nz);
    const ModuleBasis& dom = ev.module_basis(nz.dom);
    const ModuleBasis& cod = ev.module_basis(nz.cod);
    for (long j = 0; j < dom.dim(); ++j) {
      SparseVec v = ev.apply(cm, SparseVec::unit(j, Rat(1)));
      if (v.empty()) continue;
      std::ostringstream os;
      os << "column " << dom.mono_str(ev.pair(), j) << ": row "
         << cod.mono_str(ev.pair(), v.e.front().first)
         << " should vanish but is " << rat_str(v.e.front().second);
      return {false, os.str()};
    }
    return {true, ""};
  }
  std::string w = ev.first_difference(a, b);
  return {w.empty(), w};
}

Verdict verify_relation(const GoodPair& pair, const std::string& relation_id,
                        const std::string& params, int n) {
  // The bound needed to reproduce the instance is the largest numeric value
  // appearing in its parameter string.
  int bound = 1;
  std::istringstream is(params);
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    try {
      bound = std::max(bound, std::stoi(tok.substr(eq + 1)));
    } catch (const std::exception&) {
    }
  }
  for (const RelationInstance& inst :
       relation_instances(pair, relation_id, bound))
    if (inst.params == params) {
      Evaluator ev(pair, n);
      return verify_instance(ev, inst);
    }
  throw std::invalid_argument("no instance of " + relation_id +
                              " with parameters \"" + params + "\"");
}

SuiteReport verify_suite(const GoodPair& pair, int bound, int n,
                         const std::string& set, int jobs) {
  SuiteReport rep;
  rep.pair_name = pair.name;
  rep.bound = bound;
  rep.n = n;
  rep.set = set;
  Evaluator ev(pair, n);
  auto tick = [] { return std::chrono::steady_clock::now(); };
  auto t0 = tick();
  for (const std::string& id : relation_ids(set)) {
    SuiteLine line;
    line.relation = id;
    std::vector<RelationInstance> instances =
        relation_instances(pair, id, bound);
    line.instances = static_cast<long>(instances.size());
    std::vector<Verdict> verdicts(instances.size());
    auto t1 = tick();
    parallel_for(static_cast<long>(instances.size()), jobs, [&](long k) {
      verdicts[k] = verify_instance(ev, instances[k]);
    });
    line.seconds = std::chrono::duration<double>(tick() - t1).count();
    for (size_t k = 0; k < instances.size(); ++k) {
      if (verdicts[k].equal) {
        ++line.equal;
      } else {
        ++line.unequal;
        if (line.witness.empty())
          line.witness = instances[k].params + " | " + verdicts[k].witness;
      }
    }
    rep.total += line.instances;
    rep.failed += line.unequal;
    rep.lines.push_back(std::move(line));
  }
  rep.seconds = std::chrono::duration<double>(tick() - t0).count();
  return rep;
}

std::string SuiteReport::str() const {
  std::ostringstream os;
  os << "relation suite: pair=" << pair_name << " bound=" << bound
     << " n=" << n << " set=" << set << "\n";
  for (const SuiteLine& l : lines) {
    os << "  " << l.relation;
    for (size_t k = l.relation.size(); k < 28; ++k) os << ' ';
    os << l.equal << "/" << l.instances << " equal";
    char buf[32];
    std::snprintf(buf, sizeof buf, "  %.2fs", l.seconds);
    os << buf;
    if (l.unequal) os << "  FIRST FAIL " << l.witness;
    os << "\n";
  }
  os << "total " << total << " instances, " << failed << " unequal, ";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds);
  os << buf << "\n";
  return os.str();
}

}  // namespace webcalc
