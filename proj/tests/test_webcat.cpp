#include "doctest.h"

#include <vector>

#include "webcalc/diagram.hpp"
#include "webcalc/parse.hpp"

using namespace webcalc;

TEST_CASE("generator endpoints") {
  Box sp{Box::Kind::Split, 0, 0, 2, 1, {}};
  CHECK(sp.dom() == Obj{{0, 3}});
  CHECK(sp.cod() == Obj{{0, 2}, {0, 1}});

  Box cr{Box::Kind::Cross, 0, 1, 2, 3, {}};
  CHECK(cr.dom() == Obj{{0, 2}, {1, 3}});
  CHECK(cr.cod() == Obj{{1, 3}, {0, 2}});

  WebMorphism m = wm_merge(0, 1, 2);
  CHECK(m.dom == Obj{{0, 1}, {0, 2}});
  CHECK(m.cod == Obj{{0, 3}});

  // Degenerate thicknesses: negative kills, zero is an identity.
  CHECK(wm_split(0, -1, 2).is_zero());
  WebMorphism trivial_split = wm_split(0, 0, 2);
  CHECK_FALSE(trivial_split.is_zero());
  CHECK(trivial_split.dom == Obj{{0, 2}});
  CHECK(trivial_split.terms[0].second.layers.empty());
  CHECK(wm_cross(0, 2, 1, 0).terms[0].second.layers.empty());
}

TEST_CASE("coupon typing") {
  GoodPair zz = builtin_pair("zigzag(A2)");
  AlgebraElement a21 = SparseVec::unit(zz.index_of("a21"));
  WebMorphism cp = wm_coupon(zz, a21, 0, 1, 1);
  CHECK(cp.dom == Obj{{0, 1}});
  CHECK(cp.cod == Obj{{1, 1}});
  Box b = cp.terms[0].second.layers[0].box;
  CHECK(b.parity(zz) == 1);
}

TEST_CASE("composition and tensor typing") {
  WebMorphism sp = wm_split(0, 1, 1);
  WebMorphism mg = wm_merge(0, 1, 1);
  WebMorphism knot = compose(mg, sp);
  CHECK(knot.dom == Obj{{0, 2}});
  CHECK(knot.cod == Obj{{0, 2}});
  for (const auto& [c, d] : knot.terms) diagram_check(d);

  CHECK_THROWS_AS(compose(sp, mg), ObjectMismatch);

  WebMorphism t = tensor(sp, wm_id(Obj{{1, 2}}));
  CHECK(t.dom == Obj{{0, 2}, {1, 2}});
  CHECK(t.cod == Obj{{0, 1}, {0, 1}, {1, 2}});

  // Zero absorbs on both sides.
  WebMorphism z = wm_zero(Obj{{0, 2}}, Obj{{0, 2}});
  CHECK(compose(knot, z).is_zero());
  CHECK(tensor(z, sp).is_zero());
  CHECK(wm_add(knot, wm_scale(Rat(-1), knot)).is_zero());
}

TEST_CASE("diagram check catches broken chains") {
  Diagram d;
  d.dom = Obj{{0, 1}};
  d.cod = Obj{{0, 1}, {0, 1}};
  Layer l;
  l.box = Box{Box::Kind::Split, 0, 0, 1, 1, {}};
  d.layers.push_back(l);  // split needs thickness 2 below
  CHECK_THROWS(diagram_check(d));
}

TEST_CASE("permutation diagrams") {
  Obj strands{{0, 1}, {1, 1}, {0, 2}};
  std::vector<int> perm{2, 0, 1};
  WebMorphism m = perm_diagram(strands, perm);
  CHECK(m.dom == strands);
  CHECK(m.cod == Obj{{1, 1}, {0, 2}, {0, 1}});
  WebMorphism ins = perm_diagram(strands, perm, Routing::Insertion);
  CHECK(ins.cod == m.cod);
  CHECK(perm_diagram(strands, {0, 1, 2}).terms[0].second.layers.empty());
}

TEST_CASE("explosion endpoints") {
  WebMorphism sp = wm_split(0, 2, 1);
  WebMorphism ex = explode(sp);
  CHECK(ex.dom == Obj{{0, 1}, {0, 1}, {0, 1}});
  CHECK(ex.cod == Obj{{0, 1}, {0, 1}, {0, 1}});
  WebMorphism con = contract(ex, sp.dom, sp.cod);
  CHECK(con.dom == sp.dom);
  CHECK(con.cod == sp.cod);
}

TEST_CASE("basis diagrams have the right frame") {
  GoodPair tr = builtin_pair("trivial");
  Obj src{{0, 2}};
  Obj dst{{0, 1}, {0, 1}};
  auto grids = enum_M(tr, src, dst);
  REQUIRE(grids.size() == 1);
  for (EtaFlavor fl : {EtaFlavor::A, EtaFlavor::Diamond}) {
    WebMorphism h = eta(tr, src, dst, grids[0], fl);
    CHECK(h.dom == src);
    CHECK(h.cod == dst);
  }
}

TEST_CASE("weight objects and transport generators") {
  Obj w = weight_obj({2, 0, 1});
  CHECK(w.total() == 3);
  for (auto [c, x] : w.parts) CHECK(c == UNIT_COLOR);

  GoodPair cl = builtin_pair("clifford1");
  AlgebraElement c = SparseVec::unit(cl.index_of("c"));
  WebMorphism e = e_generator(cl, {1, 1}, 1, 2, c, 1);
  CHECK(e.dom == weight_obj({1, 1}));
  CHECK(e.cod == weight_obj({2, 0}));
  // Removing from an empty slot kills the morphism.
  CHECK(e_generator(cl, {1, 0}, 1, 2, c, 1).is_zero());
  CHECK(e_generator(cl, {1, 1}, 1, 2, c, 2).is_zero());
}

TEST_CASE("object and element expressions") {
  GoodPair cl = builtin_pair("clifford1");
  CHECK(parse_obj(cl, "1^(2) 1^(1)") == Obj{{0, 2}, {0, 1}});
  GoodPair kk = builtin_pair("kxk");
  CHECK(parse_obj(kk, "e2^(3)") == Obj{{1, 3}});
  CHECK_THROWS_AS(parse_obj(kk, "e3^(1)"), ParseError);

  AlgebraElement x = parse_elem(cl, "2*c - 1/2*1");
  CHECK(x.at(cl.index_of("c")) == 2);
  CHECK(x.at(cl.index_of("1")) == Rat(-1) / 2);

  // Numeric tokens resolve as basis ids when the algebra names them that way.
  GoodPair zz = builtin_pair("zigzag(A2)");
  AlgebraElement v = parse_elem(zz, "2");
  CHECK(v == SparseVec::unit(zz.index_of("2")));
  CHECK_THROWS_AS(parse_elem(cl, "2*"), ParseError);
}

TEST_CASE("morphism files round trip") {
  GoodPair cl = builtin_pair("clifford1");
  WebMorphism m = parse_morphism(cl,
                                 "# split then decorate one leg\n"
                                 "dom: 1^(2)\n"
                                 "layers:\n"
                                 "[split(1;1,1)]\n"
                                 "[coupon(c; 1,1 -> 1), id(1^(1))]\n");
  CHECK(m.dom == Obj{{0, 2}});
  CHECK(m.cod == Obj{{0, 1}, {0, 1}});
  REQUIRE(m.terms.size() == 1);

  WebMorphism comb = parse_morphism(cl,
                                    "terms:\n"
                                    "coeff: 3/2\n"
                                    "dom: 1^(1)\n"
                                    "layers:\n"
                                    "coeff: -1\n"
                                    "dom: 1^(1)\n"
                                    "layers:\n"
                                    "[coupon(c; 1,1 -> 1)]\n");
  CHECK(comb.dom == Obj{{0, 1}});
  REQUIRE(comb.terms.size() == 2);
  CHECK(comb.terms[0].first == Rat(3) / 2);
  CHECK(comb.terms[1].first == -1);
}

TEST_CASE("morphism file errors carry positions") {
  GoodPair cl = builtin_pair("clifford1");
  CHECK_THROWS_AS(parse_morphism(cl, ""), ParseError);
  CHECK_THROWS_AS(parse_morphism(cl, "layers:\n"), ParseError);

  try {
    parse_morphism(cl, "dom: 1^(2)\nlayers:\n[split(1;1]\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }

  // Stacking mismatch names the offending layer.
  try {
    parse_morphism(cl, "dom: 1^(2)\nlayers:\n[merge(1;2,2)]\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("layer 1") != std::string::npos);
  }
}
