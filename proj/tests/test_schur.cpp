#include "doctest.h"

#include <string>

#include "webcalc/schur.hpp"

using namespace webcalc;

namespace {

TensorMatrixElement atom2(const GoodPair& pair, int n, int b1, int b2) {
  (void)pair;
  return tme_atom(n, TensorKey{{1, 1, b1}, {1, 1, b2}});
}

}  // namespace

TEST_CASE("coset representatives") {
  auto reps = coset_reps(1, 1);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == std::vector<int>{0, 1});
  CHECK(reps[1] == std::vector<int>{1, 0});
  CHECK(coset_reps(2, 1).size() == 3);
  CHECK(coset_reps(0, 2).size() == 1);
}

TEST_CASE("signed place permutations") {
  GoodPair cl = builtin_pair("clifford1");
  int c = cl.index_of("c");
  int e = cl.index_of("1");

  CHECK(key_parity(cl, TensorKey{{1, 1, c}, {1, 1, c}}) == 0);
  CHECK(key_parity(cl, TensorKey{{1, 1, c}, {1, 1, e}}) == 1);

  // Swapping two odd factors costs a sign; odd past even does not.
  TensorMatrixElement cc = atom2(cl, 1, c, c);
  CHECK(perm_act(cl, cc, {1, 0}) == tme_scale(Rat(-1), cc));
  TensorMatrixElement ce = atom2(cl, 1, c, e);
  TensorMatrixElement ec = atom2(cl, 1, e, c);
  CHECK(perm_act(cl, ce, {1, 0}) == ec);

  CHECK(is_invariant(cl, tme_one(cl, 2, 2)));
  CHECK_FALSE(is_invariant(cl, ce));
}

TEST_CASE("star products") {
  GoodPair tr = builtin_pair("trivial");
  TensorMatrixElement a = tme_atom(1, TensorKey{{1, 1, 0}});
  TensorMatrixElement s = star(tr, a, a);
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms.begin()->second == 2);
  CHECK(s.d == 2);

  GoodPair cl = builtin_pair("clifford1");
  TensorMatrixElement bad = atom2(cl, 1, cl.index_of("c"), cl.index_of("1"));
  CHECK_THROWS_AS(star(cl, bad, tme_one(cl, 1, 0)), std::invalid_argument);
}

TEST_CASE("weight idempotents") {
  GoodPair tr = builtin_pair("trivial");
  WeightIdempotentIndex ix{{{0, 1}, {0, 1}}};
  CHECK(ix.n() == 2);
  CHECK(ix.d() == 2);
  TensorMatrixElement xi = xi_idem(tr, ix);
  CHECK(xi.terms.size() == 2);

  // The same element through the side embeddings.
  TensorMatrixElement a = tme_atom(1, TensorKey{{1, 1, 0}});
  CHECK(shifted_star(tr, a, a) == xi);

  // Idempotent under the Schur product, and idempotent as an operator.
  CHECK(schur_mult(tr, xi, xi) == xi);
  SparseMat t = tau_tilde(tr, xi);
  CHECK(t.rows == 4);
  CHECK(mat_mul(t, t) == t);
  CHECK(sparse_rank(t) == 2);

  CHECK(schur_mult(tr, tme_one(tr, 2, 2), xi) == xi);
}

TEST_CASE("schur basis elements") {
  GoodPair tr = builtin_pair("trivial");
  MatrixComposition g;
  g.t = g.u = 1;
  g.cell.resize(1);
  g.cell[0].mult = {{0, 2}};
  TensorMatrixElement et = eta_tilde(tr, g, 1, 2);
  REQUIRE(et.terms.size() == 1);
  // No factors outside the sub-basis, so the prefactor is the plain star
  // multiplicity 2! and nothing else.
  CHECK(et.terms.begin()->second == 2);

  GoodPair cl = builtin_pair("clifford1");
  MatrixComposition h;
  h.t = h.u = 1;
  h.cell.resize(1);
  h.cell[0].mult = {{cl.index_of("1"), 1}, {cl.index_of("c"), 1}};
  TensorMatrixElement ht = eta_tilde(cl, h, 1, 2);
  CHECK(ht.terms.size() == 2);
  for (const auto& [k, v] : ht.terms) CHECK(v == 1);
  CHECK(is_invariant(cl, ht));

  CHECK_FALSE(tme_str(cl, ht).empty());
  CHECK_FALSE(tme_export(cl, ht).empty());
}

TEST_CASE("left action matrices") {
  GoodPair cl = builtin_pair("clifford1");
  int c = cl.index_of("c");
  TensorMatrixElement ec = tme_atom(1, TensorKey{{1, 1, c}});
  SparseMat m = tau_tilde(cl, ec);
  REQUIRE(m.rows == 2);
  // Left multiplication by c swaps the even and odd lines of V_1.
  CHECK(m.col[0].nnz() == 1);
  CHECK(mat_mul(m, m) == SparseMat::identity(2));

  VTensorBasis vb(cl, 2, 2);
  CHECK(vb.dim() == 16);
  std::vector<std::pair<int, int>> tuple{{2, c}, {1, 0}};
  CHECK(vb.decode(vb.encode(tuple)) == tuple);
}

TEST_CASE("symmetrization matrix") {
  GoodPair cl = builtin_pair("clifford1");
  Evaluator ev(cl, 1);
  SparseMat chi = chi_matrix(ev, 2);
  CHECK(chi.cols() == 4);
  CHECK(chi.rows == 2);  // S^2 over one even and one odd variable
  CHECK(sparse_rank(chi) == 2);
}

TEST_CASE("grid embedding") {
  GoodPair tr = builtin_pair("trivial");
  MatrixComposition g;
  g.t = g.u = 1;
  g.cell.resize(1);
  g.cell[0].mult = {{0, 2}};
  MatrixComposition full = embed_grid(g, {2, 0}, {0, 2});
  CHECK(full.t == 2);
  CHECK(full.u == 2);
  CHECK(full.at(0, 1) == g.at(0, 0));
  CHECK(full.at(0, 0).size() == 0);
  CHECK(full.at(1, 1).size() == 0);
}

TEST_CASE("schur dimensions") {
  GoodPair tr = builtin_pair("trivial");
  CHECK(schur_dim(tr, 2, 2) == 10);
  CHECK(schur_dim(builtin_pair("clifford1"), 1, 2) == 2);
  CHECK(schur_dim(builtin_pair("cyclic(3)"), 1, 1) == 3);
  CHECK(schur_dim(builtin_pair("kxk"), 1, 1) == 2);
  CHECK(schur_dim(builtin_pair("zigzag(A2)"), 1, 1) == 6);
  CHECK(schur_dim_csv(tr, 2, 2).find("2,2,10") != std::string::npos);
}

TEST_CASE("web action matches schur action at small size") {
  Verdict v = check_web_schur_iso(builtin_pair("trivial"), 1, 2);
  CAPTURE(v.witness);
  CHECK(v.equal);
  Verdict w = check_web_schur_iso(builtin_pair("clifford1"), 1, 2);
  CAPTURE(w.witness);
  CHECK(w.equal);
}
