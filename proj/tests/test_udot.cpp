#include "doctest.h"

#include <string>

#include "webcalc/eval.hpp"
#include "webcalc/udot.hpp"

using namespace webcalc;

TEST_CASE("weights") {
  Weight w{{2, 0, 1}};
  CHECK(w.n() == 3);
  CHECK(w.valid());
  CHECK(w.total() == 3);
  CHECK_FALSE(Weight{{1, -1}}.valid());
  CHECK(w.str() == "(2,0,1)");
}

TEST_CASE("codomains walk the weight lattice") {
  GoodPair cl = builtin_pair("clifford1");
  AlgebraElement c = SparseVec::unit(cl.index_of("c"));

  UdotWord ok{{{1, 1}}, {{c, 1, 2}}};
  auto cod = udot_codomain(ok);
  REQUIRE(cod.has_value());
  CHECK(*cod == Weight{{2, 0}});

  UdotWord dead{{{1, 0}}, {{c, 1, 2}}};
  CHECK_FALSE(udot_codomain(dead).has_value());
  CHECK(udot_to_web(cl, dead).is_zero());

  // A later step cannot rescue an invalid intermediate.
  UdotWord through{{{1, 0}}, {{c, 1, 2}, {c, 2, 1}}};
  CHECK_FALSE(udot_codomain(through).has_value());

  UdotWord bad{{{1, 1}}, {{c, 3, 1}}};
  CHECK_THROWS_AS(udot_to_web(cl, bad), std::invalid_argument);
}

TEST_CASE("word parsing") {
  GoodPair cl = builtin_pair("clifford1");
  UdotWord w = parse_udot_word(cl, "E(c;1,2) o E(1+c;2,1) @ lambda=(1,1)");
  CHECK(w.dom == Weight{{1, 1}});
  REQUIRE(w.gens.size() == 2);
  // The leftmost factor is applied last.
  CHECK(w.gens[0].r == 2);
  CHECK(w.gens[0].s == 1);
  CHECK(w.gens[0].f.at(cl.index_of("1")) == 1);
  CHECK(w.gens[0].f.at(cl.index_of("c")) == 1);
  CHECK(w.gens[1].r == 1);

  UdotWord u = parse_udot_word(cl,
                               "E(c;1,2) \xe2\x88\x98 E(c;2,1) @ lambda=(1,1)");
  CHECK(u.gens.size() == 2);

  UdotWord s = parse_udot_word(cl, "E(2*c - 1/3*1;1,1) @ lambda=(2)");
  CHECK(s.dom == Weight{{2}});
  CHECK(s.gens[0].f.at(cl.index_of("c")) == 2);
  CHECK(s.gens[0].f.at(cl.index_of("1")) == Rat(-1) / 3);

  // Digit tokens name basis elements when the algebra spells them that way.
  GoodPair zz = builtin_pair("zigzag(A2)");
  UdotWord z = parse_udot_word(zz, "E(2;1,1) @ lambda=(1)");
  CHECK(z.gens[0].f == SparseVec::unit(zz.index_of("2")));
  UdotWord z2 = parse_udot_word(zz, "E(3*2;1,1) @ lambda=(1)");
  CHECK(z2.gens[0].f == SparseVec::unit(zz.index_of("2"), Rat(3)));

  CHECK_THROWS_AS(parse_udot_word(cl, "E(c;1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_udot_word(cl, "E(c;0,1) @ lambda=(1,1)"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_udot_word(cl, "E(c;1,1) @ lambda=(1) waste"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_udot_word(cl, "E(q;1,1) @ lambda=(1)"),
                  std::invalid_argument);
}

TEST_CASE("diagonal units act by the weight entry") {
  GoodPair tr = builtin_pair("trivial");
  Evaluator ev(tr, 2);
  WebMorphism m = e_generator(tr, {2, 0}, 1, 1, tr.unit(), 1);
  WebMorphism rhs = wm_scale(Rat(2), wm_id(weight_obj({2, 0})));
  CHECK(ev.first_difference(m, rhs).empty());
}

TEST_CASE("divided powers") {
  GoodPair tr = builtin_pair("trivial");
  Evaluator ev(tr, 2);
  WebMorphism sq = e_generator(tr, {0, 2}, 1, 2, tr.unit(), 2);
  WebMorphism step1 = e_generator(tr, {0, 2}, 1, 2, tr.unit(), 1);
  WebMorphism step2 = e_generator(tr, {1, 1}, 1, 2, tr.unit(), 1);
  WebMorphism twice = compose(step2, step1);
  CHECK(ev.first_difference(sq, wm_scale(Rat(1, 2), twice)).empty());
}

TEST_CASE("mixed content from a commutator") {
  GoodPair cl = builtin_pair("clifford1");
  Evaluator ev(cl, 2);
  AlgebraElement c = SparseVec::unit(cl.index_of("c"));
  WebMorphism lhs = e_generator(cl, {1, 1}, 1, 2, c, 1);
  WebMorphism a = compose(e_generator(cl, {1, 1}, 1, 2, cl.unit(), 1),
                          e_generator(cl, {1, 1}, 2, 2, c, 1));
  WebMorphism b = compose(e_generator(cl, {2, 0}, 2, 2, c, 1),
                          e_generator(cl, {1, 1}, 1, 2, cl.unit(), 1));
  CHECK(ev.first_difference(lhs, wm_add(a, wm_scale(Rat(-1), b))).empty());
}

TEST_CASE("relation sweeps") {
  SuiteReport tr = verify_udot(builtin_pair("trivial"), 2, 1);
  CHECK(tr.total > 0);
  CHECK(tr.all_equal());

  SuiteReport cl = verify_udot(builtin_pair("clifford1"), 1, 2);
  CHECK(cl.total > 0);
  CHECK(cl.all_equal());
}
