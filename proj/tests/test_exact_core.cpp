#include "doctest.h"

#include <vector>

#include "webcalc/linalg.hpp"
#include "webcalc/rational.hpp"
#include "webcalc/sparse.hpp"

using namespace webcalc;

TEST_CASE("factorial and binomials") {
  const long fact[] = {1, 1, 2, 6, 24, 120, 720};
  for (long n = 0; n <= 6; ++n) CHECK(factorial(n) == fact[n]);

  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(4, 4) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(5, -1) == 0);

  // gbinom extends to negative upper index: gbinom(-1,k) = (-1)^k.
  CHECK(gbinom(-1, 0) == 1);
  CHECK(gbinom(-1, 3) == -1);
  CHECK(gbinom(-2, 2) == 3);
  CHECK(gbinom(6, 3) == binom(6, 3));
  CHECK(gbinom(2, 5) == 0);
}

TEST_CASE("rational parse and print") {
  CHECK(rat_parse("3/6") == rat(1, 2));
  CHECK(rat_parse("-2/4") == rat(-1, 2));
  CHECK(rat_parse("7") == 7);
  CHECK(rat_str(rat(6, 4)) == "3/2");
  CHECK(rat_str(rat(-3)) == "-3");
  CHECK(rat_parse(rat_str(rat(22, 7))) == rat(22, 7));

  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("sparse vector arithmetic") {
  SparseVec v = SparseVec::unit(3, rat(2));
  CHECK(v.at(3) == 2);
  CHECK(v.at(0) == 0);
  CHECK(v.lead() == 3);

  // axpy that cancels the only entry leaves no stored zeros.
  v.axpy(rat(-2), SparseVec::unit(3));
  CHECK(v.empty());
  CHECK(v.lead() == -1);

  SparseVec w = SparseVec::unit(1);
  w.axpy(rat(1, 3), SparseVec::unit(4, rat(6)));
  CHECK(w.nnz() == 2);
  CHECK(w.at(4) == 2);
  w.scale(rat(-1, 2));
  CHECK(w.at(1) == rat(-1, 2));

  SparseVecBuilder b;
  b.add(5, rat(1));
  b.add(2, rat(3));
  b.add(5, rat(-1));
  b.add(2, rat(1));
  SparseVec u = b.build();
  CHECK(u.nnz() == 1);
  CHECK(u.at(2) == 4);
}

namespace {

SparseMat from_dense(const std::vector<std::vector<long>>& rows) {
  SparseMat m(static_cast<int>(rows.size()),
              static_cast<int>(rows[0].size()));
  for (int j = 0; j < m.cols(); ++j) {
    SparseVecBuilder b;
    for (int i = 0; i < m.rows; ++i) b.add(i, rat(rows[i][j]));
    m.col[j] = b.build();
  }
  return m;
}

}  // namespace

TEST_CASE("sparse matrix product and flattening") {
  SparseMat a = from_dense({{1, 2}, {0, 1}});
  SparseMat b = from_dense({{3, 0}, {1, 2}});
  // a after b
  SparseMat ab = mat_mul(a, b);
  CHECK(ab == from_dense({{5, 4}, {1, 2}}));
  CHECK(mat_mul(SparseMat::identity(2), b) == b);

  CHECK(mat_transpose(ab) == from_dense({{5, 1}, {4, 2}}));
  CHECK(ab.apply(SparseVec::unit(1)) == ab.col[1]);

  auto diff = mat_first_diff(ab, from_dense({{5, 4}, {1, 3}}));
  CHECK(diff == std::pair<long, long>{1, 1});
  CHECK(mat_first_diff(ab, ab) == std::pair<long, long>{-1, -1});

  // Flat index is col*rows + row.
  SparseVec flat = mat_vec(from_dense({{0, 7}, {0, 0}}));
  CHECK(flat.nnz() == 1);
  CHECK(flat.at(2) == 7);
}

TEST_CASE("mixed radix indexing") {
  MixedRadix mr{{2, 3, 2}};
  CHECK(mr.total() == 12);
  CHECK(mr.index({0, 0, 0}) == 0);
  CHECK(mr.index({1, 2, 1}) == 11);
  // Leftmost factor most significant.
  CHECK(mr.index({1, 0, 0}) == 6);
  for (long i = 0; i < mr.total(); ++i) CHECK(mr.index(mr.digits(i)) == i);
}

TEST_CASE("echelon rank and kernel tracking") {
  Echelon e(true);
  SparseVec v1 = SparseVec::unit(0);
  v1.axpy(rat(1), SparseVec::unit(1));
  SparseVec v2 = SparseVec::unit(1, rat(2));
  CHECK(e.insert(v1));
  CHECK(e.insert(v2));
  CHECK(e.rank() == 2);

  // v1 + v2 is dependent; the kernel combination must name all three sources.
  SparseVec v3 = v1;
  v3.axpy(rat(1), v2);
  auto k = e.insert_or_kernel(v3);
  REQUIRE(k.has_value());
  CHECK(k->at(2) == 1);
  SparseVec zero;
  zero.axpy(k->at(0), v1);
  zero.axpy(k->at(1), v2);
  zero.axpy(k->at(2), v3);
  CHECK(zero.empty());
  CHECK(e.rank() == 2);

  auto expr = e.express(v3);
  REQUIRE(expr.has_value());
  SparseVec back;
  back.axpy(expr->at(0), v1);
  back.axpy(expr->at(1), v2);
  CHECK(back == v3);

  CHECK(e.contains(v2));
  CHECK_FALSE(e.contains(SparseVec::unit(7)));
}

TEST_CASE("rank, solve, nullspace") {
  // Rank 2: third column = first + second.
  SparseMat a = from_dense({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}});
  CHECK(sparse_rank(a) == 2);

  SparseVec b;
  b.axpy(rat(1), SparseVec::unit(0, rat(3)));
  b.axpy(rat(1), SparseVec::unit(1, rat(5)));
  b.axpy(rat(1), SparseVec::unit(2, rat(8)));
  SolveResult s = sparse_solve(a, b);
  REQUIRE(s.ok);
  CHECK(a.apply(s.x) == b);

  // (0,0,1) is outside the column span.
  CHECK_FALSE(sparse_solve(a, SparseVec::unit(2)).ok);

  auto ns = sparse_nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK(a.apply(ns[0]).empty());
  CHECK_FALSE(ns[0].empty());

  CHECK(sparse_rank(SparseMat::identity(4)) == 4);
  CHECK(sparse_nullspace(SparseMat::identity(4)).empty());
}
