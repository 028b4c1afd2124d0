#include "doctest.h"

#include <vector>

#include "webcalc/wreath.hpp"

using namespace webcalc;

namespace {

WreathElement atom(std::vector<int> perm, std::vector<int> tuple) {
  return wr_atom(std::move(perm), std::move(tuple));
}

}  // namespace

TEST_CASE("wreath element arithmetic") {
  GoodPair cl = builtin_pair("clifford1");
  int e = cl.index_of("1");
  int c = cl.index_of("c");

  WreathElement x = atom({1, 0}, {c, e});
  CHECK(wreath_parity(cl, x.terms.begin()->first) == 1);
  CHECK(wr_add(x, wr_scale(Rat(-1), x)).is_zero());
  CHECK(wr_zero(2).is_zero());
}

TEST_CASE("wreath dimensions") {
  GoodPair cl = builtin_pair("clifford1");
  CHECK(wreath_dim(cl, 2) == 8);
  CHECK(wreath_dim(builtin_pair("trivial"), 3) == 6);
  GoodPair zz = builtin_pair("zigzag(A2)");
  CHECK(wreath_dim(zz, 2) == 72);
  CHECK(static_cast<long>(wreath_basis(zz, 2).size()) == wreath_dim(zz, 2));
  CHECK(wreath_dim(cl, 0) == 1);
}

TEST_CASE("composition signs") {
  GoodPair cl = builtin_pair("clifford1");
  int e = cl.index_of("1");
  int c = cl.index_of("c");
  WreathElement s = atom({1, 0}, {e, e});

  // The transposition squares to the identity.
  CHECK(wreath_mult(cl, s, s) == atom({0, 1}, {e, e}));

  // One odd factor slides through the crossing without a sign...
  CHECK(wreath_mult(cl, atom({0, 1}, {c, e}), s) == atom({1, 0}, {e, c}));
  // ...two odd factors cross each other and pick one up.
  CHECK(wreath_mult(cl, atom({0, 1}, {c, c}), s) ==
        wr_scale(Rat(-1), atom({1, 0}, {c, c})));

  // Straight tuples: the left tuple still crosses the right one factorwise.
  CHECK(wreath_mult(cl, atom({0, 1}, {e, c}), atom({0, 1}, {c, e})) ==
        wr_scale(Rat(-1), atom({0, 1}, {c, c})));
  CHECK(wreath_mult(cl, atom({0, 1}, {c, e}), atom({0, 1}, {e, c})) ==
        atom({0, 1}, {c, c}));
}

TEST_CASE("associativity with odd factors") {
  GoodPair cl = builtin_pair("clifford1");
  int e = cl.index_of("1");
  int c = cl.index_of("c");
  WreathElement x = atom({1, 0, 2}, {c, e, c});
  WreathElement y = atom({2, 1, 0}, {c, c, e});
  WreathElement z = atom({0, 2, 1}, {e, c, c});
  CHECK(wreath_mult(cl, wreath_mult(cl, x, y), z) ==
        wreath_mult(cl, x, wreath_mult(cl, y, z)));
}

TEST_CASE("defining representation is multiplicative") {
  GoodPair cl = builtin_pair("clifford1");
  int e = cl.index_of("1");
  int c = cl.index_of("c");
  WreathElement unit = atom({0, 1}, {e, e});
  CHECK(rho(cl, unit, 2) == SparseMat::identity(16));

  std::vector<WreathElement> sample = {
      atom({1, 0}, {e, e}), atom({0, 1}, {c, e}), atom({0, 1}, {e, c}),
      atom({1, 0}, {c, c}), atom({0, 1}, {c, c})};
  for (const auto& x : sample)
    for (const auto& y : sample) {
      WreathElement xy = wreath_mult(cl, x, y);
      CHECK(mat_mul(rho(cl, x, 2), rho(cl, y, 2)) == rho(cl, xy, 2));
    }
}

TEST_CASE("web image of wreath basis elements") {
  GoodPair zz = builtin_pair("zigzag(A2)");
  WreathKey k{{1, 0}, {zz.index_of("a12"), zz.index_of("1")}};
  WebMorphism m = wreath_to_web(zz, k);
  CHECK(m.dom == Obj{{1, 1}, {0, 1}});
  CHECK(m.cod == Obj{{0, 1}, {0, 1}});
}

TEST_CASE("thin endomorphisms realize the wreath algebra") {
  Verdict a = wreath_from_web(builtin_pair("trivial"), 2);
  CAPTURE(a.witness);
  CHECK(a.equal);
  Verdict b = wreath_from_web(builtin_pair("clifford1"), 2);
  CAPTURE(b.witness);
  CHECK(b.equal);
}

TEST_CASE("image rank meets the commutant") {
  SchurWeylReport rep = schur_weyl_check(builtin_pair("trivial"), 2, 2);
  CHECK(rep.asserted);
  CHECK(rep.equal);
  CHECK(rep.commutant_dim == 2);
  CHECK(rep.image_rank == 2);
  CHECK_FALSE(rep.str().empty());
}

TEST_CASE("two-sided actions commute") {
  GoodPair cl = builtin_pair("clifford1");
  int e = cl.index_of("1");
  int c = cl.index_of("c");
  SparseMat r = right_e_action(cl, 1, 2, c, 1, 1);
  for (const auto& x : {atom({1, 0}, {e, e}), atom({0, 1}, {c, e})}) {
    SparseMat l = rho(cl, x, 1);
    CHECK(mat_mul(l, r) == mat_mul(r, l));
  }
}
