#include "doctest.h"

#include <string>

#include "webcalc/algebra.hpp"

using namespace webcalc;

TEST_CASE("builtin pairs validate") {
  for (const char* name :
       {"trivial", "cyclic(3)", "clifford1", "kxk", "zigzag(A2)"}) {
    GoodPair p = builtin_pair(name);
    CAPTURE(name);
    ValidationReport rep = p.validate();
    for (const auto& v : rep.violations) CAPTURE(v);
    CHECK(rep.ok());
  }
  CHECK_THROWS_AS(builtin_pair("heisenberg"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_pair("cyclic(0)"), std::invalid_argument);
}

TEST_CASE("builtin shapes") {
  GoodPair t = builtin_pair("trivial");
  CHECK(t.dim() == 1);
  CHECK(t.colors() == 1);
  CHECK(t.semisimple);

  GoodPair cy = builtin_pair("cyclic(4)");
  CHECK(cy.dim() == 4);
  CHECK(cy.colors() == 1);
  int g = cy.index_of("g");
  int g3 = cy.index_of("g3");
  REQUIRE(g >= 0);
  REQUIRE(g3 >= 0);
  // Exponents add modulo 4.
  CHECK(cy.basis_prod(g, g3) == SparseVec::unit(cy.index_of("1")));

  GoodPair cl = builtin_pair("clifford1");
  int c = cl.index_of("c");
  CHECK(cl.basis[c].parity == 1);
  CHECK_FALSE(cl.basis[c].in_sub);
  CHECK(cl.basis_prod(c, c) == SparseVec::unit(cl.index_of("1")));

  GoodPair kk = builtin_pair("kxk");
  CHECK(kk.colors() == 2);
  CHECK(kk.basis_prod(kk.index_of("e1"), kk.index_of("e2")).empty());

  GoodPair zz = builtin_pair("zigzag(A2)");
  CHECK(zz.dim() == 6);
  CHECK(zz.colors() == 2);
  CHECK_FALSE(zz.semisimple);
  int a12 = zz.index_of("a12");
  int a21 = zz.index_of("a21");
  CHECK(zz.basis[a12].parity == 1);
  // a12 a21 = c1 and the loop squares to zero.
  CHECK(zz.basis_prod(a12, a21) == SparseVec::unit(zz.index_of("c1")));
  int c1 = zz.index_of("c1");
  CHECK(zz.basis_prod(c1, c1).empty());
  // a12 lies in 1A2: left idempotent 1, right idempotent 2.
  CHECK(zz.basis[a12].left == zz.index_of("1"));
  CHECK(zz.basis[a12].right == zz.index_of("2"));
}

TEST_CASE("element operations") {
  GoodPair cl = builtin_pair("clifford1");
  int one = cl.index_of("1");
  int c = cl.index_of("c");

  AlgebraElement x = SparseVec::unit(one);
  x.axpy(Rat(2), SparseVec::unit(c));
  // (1 + 2c)(1 + 2c) = 1 + 4c + 4 = 5 + 4c.
  AlgebraElement sq = cl.multiply(x, x);
  CHECK(sq.at(one) == 5);
  CHECK(sq.at(c) == 4);

  CHECK(cl.parity_of(SparseVec::unit(c)) == Parity{1});
  CHECK(cl.parity_of(AlgebraElement{}) == Parity{0});
  CHECK_FALSE(cl.parity_of(x).has_value());
  CHECK(cl.in_sub_span(SparseVec::unit(one)));
  CHECK_FALSE(cl.in_sub_span(x));

  CHECK(cl.unit() == SparseVec::unit(one));
  GoodPair kk = builtin_pair("kxk");
  CHECK(kk.unit().nnz() == 2);
  CHECK(kk.color_of(kk.index_of("e2")) == 1);
  CHECK(kk.index_of("e3") == -1);

  CHECK(elem_str(cl, x) == "1 + 2*c");
  CHECK(elem_str(cl, AlgebraElement{}) == "0");
}

TEST_CASE("sub pair over the idempotents only") {
  GoodPair zz = builtin_pair("zigzag(A2)");
  GoodPair sub = make_subpair_kI(zz);
  CHECK(sub.validate().ok());
  CHECK_FALSE(sub.basis[sub.index_of("c1")].in_sub);
  CHECK(sub.basis[sub.index_of("1")].in_sub);
}

TEST_CASE("corrupted product table is caught") {
  GoodPair cl = builtin_pair("clifford1");
  int one = cl.index_of("1");
  int c = cl.index_of("c");
  cl.set_product(c, one, SparseVec::unit(c, Rat(2)));
  ValidationReport rep = cl.validate();
  CHECK_FALSE(rep.ok());
}

static const char* kDualJson = R"({
  "name": "dual-numbers",
  "idempotents": ["e"],
  "basis": [{"id": "x", "left": "e", "right": "e", "parity": 0}],
  "sub": ["x"],
  "products": [{"l": "x", "r": "x", "terms": []}]
})";

TEST_CASE("algebra files load with implicit idempotents") {
  GoodPair p = pair_from_json(kDualJson);
  CHECK(p.name == "dual-numbers");
  CHECK(p.dim() == 2);
  CHECK(p.validate().ok());
  int x = p.index_of("x");
  REQUIRE(x >= 0);
  CHECK(p.basis_prod(x, x).empty());
  CHECK(p.basis[x].in_sub);
  // finalize filled the unit actions.
  CHECK(p.basis_prod(p.index_of("e"), x) == SparseVec::unit(x));
}

TEST_CASE("algebra file errors carry field paths") {
  CHECK_THROWS_AS(pair_from_json("{"), AlgebraFileError);
  CHECK_THROWS_WITH_AS(
      pair_from_json(R"({"idempotents": [], "basis": []})"),
      doctest::Contains("$.name"), AlgebraFileError);
  CHECK_THROWS_WITH_AS(
      pair_from_json(
          R"({"name": "x", "idempotents": ["e"],
              "basis": [{"id": "b", "left": "nope", "right": "e", "parity": 0}]})"),
      doctest::Contains("basis[0].left"), AlgebraFileError);
  CHECK_THROWS_WITH_AS(
      pair_from_json(
          R"({"name": "x", "idempotents": ["e"],
              "basis": [{"id": "b", "left": "e", "right": "e", "parity": 2}]})"),
      doctest::Contains("parity"), AlgebraFileError);
}
