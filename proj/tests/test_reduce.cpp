#include "doctest.h"

#include <algorithm>
#include <set>

#include "webcalc/reduce.hpp"

using namespace webcalc;

TEST_CASE("relation registry sets") {
  auto defining = relation_ids("defining");
  auto implied = relation_ids("implied");
  auto all = relation_ids("all");
  CHECK_FALSE(defining.empty());
  CHECK_FALSE(implied.empty());
  CHECK(all.size() == defining.size() + implied.size());

  std::set<std::string> ds(defining.begin(), defining.end());
  for (const auto& id : implied) CHECK(ds.count(id) == 0);
  CHECK(ds.count("knothole") == 1);
  CHECK(std::count(implied.begin(), implied.end(), "double-cross") == 1);

  CHECK_THROWS_AS(relation_ids("bogus"), std::invalid_argument);
  GoodPair tr = builtin_pair("trivial");
  CHECK_THROWS_AS(relation_instances(tr, "bogus", 2), std::invalid_argument);
}

TEST_CASE("single relation instances") {
  GoodPair cl = builtin_pair("clifford1");
  auto insts = relation_instances(cl, "knothole", 2);
  REQUIRE_FALSE(insts.empty());
  Evaluator ev(cl, 2);
  for (const auto& inst : insts) {
    CAPTURE(inst.params);
    Verdict v = verify_instance(ev, inst);
    CAPTURE(v.witness);
    CHECK(v.equal);
  }

  Verdict one = verify_relation(cl, "knothole", insts[0].params, 2);
  CHECK(one.equal);
  CHECK_THROWS_AS(verify_relation(cl, "knothole", "no such params", 2),
                  std::invalid_argument);
}

TEST_CASE("zero morphism comparisons") {
  GoodPair cl = builtin_pair("clifford1");
  Evaluator ev(cl, 1);
  Obj o{{0, 1}};
  RelationInstance both{"t", "", wm_zero(o, o), wm_zero(o, o)};
  CHECK(verify_instance(ev, both).equal);

  // Zero against a nonzero morphism fails with a named witness column.
  RelationInstance bad{"t", "", wm_zero(o, o), wm_id(o)};
  Verdict v = verify_instance(ev, bad);
  CHECK_FALSE(v.equal);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("defining suite passes at desk scale") {
  GoodPair tr = builtin_pair("trivial");
  SuiteReport rep = verify_suite(tr, 2, 2, "defining");
  CHECK(rep.all_equal());
  CHECK(rep.total > 0);
  CHECK(rep.failed == 0);
  CHECK(rep.lines.size() == relation_ids("defining").size());
  CHECK(rep.str().find("trivial") != std::string::npos);
}

TEST_CASE("corrupted algebra fails the suite") {
  GoodPair cl = builtin_pair("clifford1");
  cl.set_product(cl.index_of("c"), cl.index_of("1"),
                 SparseVec::unit(cl.index_of("c"), Rat(2)));
  SuiteReport rep = verify_suite(cl, 1, 1, "defining");
  CHECK(rep.failed >= 1);
  bool witnessed = false;
  for (const auto& l : rep.lines)
    if (l.unequal > 0 && !l.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("basis reduction inverts eta") {
  GoodPair cl = builtin_pair("clifford1");
  Obj src{{0, 2}};
  Obj dst{{0, 1}, {0, 1}};
  auto grids = enum_M(cl, src, dst);
  REQUIRE_FALSE(grids.empty());
  for (size_t k = 0; k < grids.size(); ++k) {
    WebMorphism h = eta(cl, src, dst, grids[k], EtaFlavor::A);
    BasisCoordinates bc = reduce_to_basis(cl, h);
    REQUIRE(bc.index.size() == grids.size());
    CHECK(bc.coeff == SparseVec::unit(static_cast<long>(k)));
  }
}

TEST_CASE("basis reduction is linear") {
  GoodPair cl = builtin_pair("clifford1");
  Obj o{{0, 1}};
  auto grids = enum_M(cl, o, o);
  REQUIRE(grids.size() == 2);
  WebMorphism h0 = eta(cl, o, o, grids[0], EtaFlavor::A);
  WebMorphism h1 = eta(cl, o, o, grids[1], EtaFlavor::A);
  WebMorphism mix = wm_add(wm_scale(Rat(3), h0), wm_scale(Rat(-2), h1));
  BasisCoordinates bc = reduce_to_basis(cl, mix);
  CHECK(bc.coeff.at(0) == 3);
  CHECK(bc.coeff.at(1) == -2);
}

TEST_CASE("empty hom spaces reduce to nothing") {
  GoodPair tr = builtin_pair("trivial");
  BasisCoordinates bc =
      reduce_to_basis(tr, wm_zero(Obj{{0, 1}}, Obj{{0, 2}}));
  CHECK(bc.index.empty());
  CHECK(bc.coeff.empty());
}
