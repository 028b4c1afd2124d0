#include "doctest.h"

#include <vector>

#include "webcalc/eval.hpp"
#include "webcalc/rational.hpp"

using namespace webcalc;

TEST_CASE("symmetric power bases") {
  GoodPair tr = builtin_pair("trivial");
  Evaluator ev(tr, 2);
  CHECK(ev.sym_basis(0, 2).dim() == 3);
  CHECK(ev.sym_basis(0, 0).dim() == 1);
  Evaluator ev3(tr, 3);
  CHECK(ev3.sym_basis(0, 2).dim() == 6);

  // Odd variables square to zero: n even generators, n odd ones.
  GoodPair cl = builtin_pair("clifford1");
  Evaluator ec(cl, 2);
  CHECK(ec.sym_basis(0, 2).dim() == 8);

  GoodPair zz = builtin_pair("zigzag(A2)");
  Evaluator ez(zz, 1);
  CHECK(ez.sym_basis(UNIT_COLOR, 2).dim() == 19);

  Evaluator e1(cl, 1);
  const SymBasis& sb = e1.sym_basis(0, 1);
  CHECK(sb.dim() == 2);
  SymMonomial even{{{1, cl.index_of("1")}}};
  SymMonomial odd{{{1, cl.index_of("c")}}};
  CHECK(sb.index_of(even) >= 0);
  CHECK(sb.index_of(odd) >= 0);
  CHECK(sb.par[sb.index_of(odd)] == 1);
}

TEST_CASE("straightening") {
  GoodPair cl = builtin_pair("clifford1");
  int c = cl.index_of("c");
  int sign = 1;
  std::vector<std::pair<int, int>> f{{2, c}, {1, c}};
  CHECK(straighten(cl, f, sign));
  CHECK(f == std::vector<std::pair<int, int>>{{1, c}, {2, c}});
  CHECK(sign == -1);

  std::vector<std::pair<int, int>> dead{{1, c}, {1, c}};
  CHECK_FALSE(straighten(cl, dead, sign));
}

TEST_CASE("module bases") {
  GoodPair cl = builtin_pair("clifford1");
  Evaluator ev(cl, 2);
  const ModuleBasis& mb = ev.module_basis(Obj{{0, 1}, {0, 1}});
  CHECK(mb.dim() == 16);
  CHECK(ev.module_basis(Obj{}).dim() == 1);
  int odd = 0;
  for (char p : mb.par) odd += p;
  CHECK(odd == 8);
}

TEST_CASE("coupon action on a thin strand") {
  GoodPair cl = builtin_pair("clifford1");
  Evaluator ev(cl, 1);
  const SymBasis& sb = ev.sym_basis(0, 1);
  long i0 = sb.index_of(SymMonomial{{{1, cl.index_of("1")}}});
  long i1 = sb.index_of(SymMonomial{{{1, cl.index_of("c")}}});
  WebMorphism cp = wm_coupon(cl, SparseVec::unit(cl.index_of("c")), 0, 1, 0);
  SparseMat m = ev.eval(cp);
  // Left multiplication by c swaps v^1 and v^c.
  CHECK(m.col[i0].at(i1) == 1);
  CHECK(m.col[i1].at(i0) == 1);
  CHECK(m.col[i0].at(i0) == 0);
}

TEST_CASE("knothole collapse") {
  GoodPair tr = builtin_pair("trivial");
  Evaluator ev(tr, 2);
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y) {
      WebMorphism loop = compose(wm_merge(0, x, y), wm_split(0, x, y));
      WebMorphism rhs =
          wm_scale(rat(gbinom(x + y, x)), wm_id(Obj{{0, x + y}}));
      CHECK(ev.first_difference(loop, rhs).empty());
    }
}

TEST_CASE("super interchange sign") {
  GoodPair cl = builtin_pair("clifford1");
  Evaluator ev(cl, 1);
  WebMorphism cp = wm_coupon(cl, SparseVec::unit(cl.index_of("c")), 0, 1, 0);
  WebMorphism id1 = wm_id(Obj{{0, 1}});
  WebMorphism a = tensor(cp, id1);
  WebMorphism b = tensor(id1, cp);
  // Odd boxes anticommute when they slide past each other.
  CHECK(ev.first_difference(compose(a, b), wm_scale(Rat(-1), compose(b, a)))
            .empty());
  CHECK_FALSE(ev.first_difference(compose(a, b), compose(b, a)).empty());
}

TEST_CASE("evaluation is functorial") {
  GoodPair cl = builtin_pair("clifford1");
  Evaluator ev(cl, 2);
  WebMorphism sp = wm_split(0, 1, 1);
  WebMorphism mg = wm_merge(0, 1, 1);
  CHECK(ev.eval(compose(sp, mg)) == mat_mul(ev.eval(sp), ev.eval(mg)));

  WebMorphism m = compose(sp, mg);
  for (long j = 0; j < ev.eval(m).cols(); ++j)
    CHECK(ev.apply(m, SparseVec::unit(j)) == ev.eval(m).col[j]);

  CompiledMorphism cm = ev.compile(m);
  SparseVec probe = SparseVec::unit(0);
  probe.axpy(Rat(3), SparseVec::unit(2));
  CHECK(ev.apply(cm, probe) == ev.apply(m, probe));
}

TEST_CASE("routing independence of permutation diagrams") {
  GoodPair zz = builtin_pair("zigzag(A2)");
  Evaluator ev(zz, 1);
  Obj strands{{0, 1}, {1, 1}, {0, 1}};
  std::vector<int> perm{2, 0, 1};
  CHECK(ev.first_difference(perm_diagram(strands, perm),
                            perm_diagram(strands, perm, Routing::Insertion))
            .empty());
}

TEST_CASE("zero morphisms and reports") {
  GoodPair tr = builtin_pair("trivial");
  Evaluator ev(tr, 2);
  SparseMat z = ev.eval(wm_zero(Obj{{0, 2}}, Obj{{0, 1}, {0, 1}}));
  CHECK(z.is_zero());
  CHECK(z.rows == 4);
  CHECK(z.cols() == 3);

  GoodPair cl = builtin_pair("clifford1");
  Evaluator ec(cl, 1);
  WebMorphism cp = wm_coupon(cl, SparseVec::unit(cl.index_of("c")), 0, 1, 0);
  CHECK_FALSE(ec.first_difference(wm_id(Obj{{0, 1}}), cp).empty());
  CHECK(ec.export_matrix(cp).find("1") != std::string::npos);
}
