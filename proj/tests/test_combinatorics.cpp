#include "doctest.h"

#include <algorithm>
#include <set>

#include "webcalc/combinatorics.hpp"
#include "webcalc/rational.hpp"

using namespace webcalc;

TEST_CASE("objects reduce and concatenate") {
  Obj o{{0, 2}, {1, 0}, {0, 1}};
  CHECK(o.total() == 3);
  CHECK(o.count() == 3);
  Obj r = o.reduced();
  CHECK(r == Obj{{0, 2}, {0, 1}});
  // Adjacent equal colors stay separate parts; only zero parts drop.
  CHECK(Obj{{0, 1}, {0, 1}}.reduced().count() == 2);
  CHECK(obj_concat(Obj{{0, 1}}, Obj{{1, 2}}) == Obj{{0, 1}, {1, 2}});
  CHECK(Obj{}.total() == 0);
}

TEST_CASE("composition grids") {
  auto comps = enum_compositions(3, 4);
  CHECK(comps.size() == 15);  // binom(6,2)
  std::set<std::vector<int>> seen(comps.begin(), comps.end());
  CHECK(seen.size() == comps.size());
  for (const auto& c : comps) {
    CHECK(c.size() == 3);
    int s = 0;
    for (int x : c) {
      CHECK(x >= 0);
      s += x;
    }
    CHECK(s == 4);
  }
  CHECK(seen.count({4, 0, 0}) == 1);
  CHECK(seen.count({0, 0, 4}) == 1);
  CHECK(enum_compositions(2, 0).size() == 1);
}

TEST_CASE("colored object enumeration") {
  // One color: compositions of d into at most n positive parts.
  CHECK(enum_colored(1, 2, 3).size() == 3);
  // Two colors: sum over k <= n of binom(d-1,k-1) * 2^k.
  auto objs = enum_colored(2, 2, 2);
  CHECK(objs.size() == 6);
  std::set<Obj> seen(objs.begin(), objs.end());
  CHECK(seen.size() == objs.size());
  for (const auto& o : objs) {
    CHECK(o.total() == 2);
    CHECK(o == o.reduced());
  }
}

TEST_CASE("basis blocks") {
  GoodPair zz = builtin_pair("zigzag(A2)");
  auto block = basis_block(zz, 0, 1);
  REQUIRE(block.size() == 1);
  CHECK(zz.basis[block[0]].id == "a12");
  CHECK(basis_block(zz, 0, 0).size() == 2);  // vertex 1 and its loop
  CHECK(basis_block(zz, UNIT_COLOR, UNIT_COLOR).size() == 6);
  CHECK(basis_block(zz, UNIT_COLOR, 1).size() == 3);  // e2, c2, a12
}

TEST_CASE("basis diagram index sets") {
  GoodPair tr = builtin_pair("trivial");
  Obj thin{{0, 1}, {0, 1}};
  Obj thick{{0, 2}};
  CHECK(enum_M(tr, thin, thin).size() == 2);  // permutation grids
  CHECK(enum_M(tr, thick, thin).size() == 1);
  CHECK(enum_M(tr, thick, thick).size() == 1);
  CHECK(enum_M(tr, thin, Obj{{0, 1}}).empty());  // totals differ

  GoodPair cl = builtin_pair("clifford1");
  CHECK(enum_M(cl, Obj{{0, 1}}, Obj{{0, 1}}).size() == 2);
  // Thickness 2 cell: 1^2 and 1c survive, cc dies on the odd square.
  CHECK(enum_M(cl, thick, thick).size() == 2);

  GoodPair zz = builtin_pair("zigzag(A2)");
  // Single strand from color 1 to color 2: the cell lives over 2A1 = {a21}.
  CHECK(enum_M(zz, Obj{{0, 1}}, Obj{{1, 1}}).size() == 1);
}

TEST_CASE("restricted composition factorials") {
  GoodPair cl = builtin_pair("clifford1");
  int e = cl.index_of("1");
  int c = cl.index_of("c");
  REQUIRE(e < c);  // mult entries are sorted by basis index

  MatrixComposition m;
  m.t = m.u = 1;
  m.cell.resize(1);
  m.cell[0].mult = {{e, 3}, {c, 1}};
  CHECK(m.at(0, 0).size() == 4);
  CHECK(m.at(0, 0).of(e) == 3);
  CHECK(m.at(0, 0).of(c) == 1);

  std::vector<char> all(cl.dim(), 1);
  CHECK(bang(m, all) == 6);
  auto sub = sub_mask(cl);
  CHECK(bang(m, sub) == 6);  // only "1" is in the sub-basis
  CHECK(bang(m, complement_mask(sub)) == 1);
}

TEST_CASE("multipartition counts per simple type") {
  GoodPair tr = builtin_pair("trivial");
  CHECK(enum_multipartitions(tr, 2, 2).size() == 2);
  CHECK(enum_multipartitions(tr, 1, 3).size() == 1);

  GoodPair cl = builtin_pair("clifford1");
  CHECK(enum_multipartitions(cl, 1, 2).size() == 1);
  CHECK(enum_multipartitions(cl, 2, 3).size() == 2);  // strict, <= 2 parts

  GoodPair kk = builtin_pair("kxk");
  CHECK(enum_multipartitions(kk, 1, 2).size() == 3);

  GoodPair cy = builtin_pair("cyclic(3)");
  CHECK(enum_multipartitions(cy, 1, 1).size() == 3);

  GoodPair zz = builtin_pair("zigzag(A2)");
  CHECK_THROWS_AS(enum_multipartitions(zz, 1, 1), std::invalid_argument);
}
