#pragma once

#include <utility>
#include <vector>

#include "webcalc/rational.hpp"

namespace webcalc {

// Sparse vector over Q. Entries sorted by index, no stored zeros.
struct SparseVec {
  std::vector<std::pair<long, Rat>> e;

  static SparseVec unit(long i, Rat c = Rat(1)) {
    SparseVec v;
    if (c != 0) v.e.emplace_back(i, std::move(c));
    return v;
  }

  bool empty() const { return e.empty(); }
  size_t nnz() const { return e.size(); }
  Rat at(long i) const;

  // Index of the first (lowest-index) nonzero entry; -1 when zero.
  long lead() const { return e.empty() ? -1 : e.front().first; }

  void scale(const Rat& c);
  // *this += c * w
  void axpy(const Rat& c, const SparseVec& w);

  bool operator==(const SparseVec& o) const { return e == o.e; }
};

// Accumulates unordered terms, then emits a canonical SparseVec.
struct SparseVecBuilder {
  std::vector<std::pair<long, Rat>> terms;
  void add(long i, const Rat& c) {
    if (c != 0) terms.emplace_back(i, c);
  }
  SparseVec build();
};

// Column-major sparse matrix over Q with explicit shape. Column j is the
// image of domain basis vector j; rows index the codomain basis.
struct SparseMat {
  int rows = 0;
  std::vector<SparseVec> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), col(c) {}

  int cols() const { return static_cast<int>(col.size()); }
  bool is_zero() const;
  size_t nnz() const;

  static SparseMat identity(int n);

  // y = (*this) x, expanding x over columns.
  SparseVec apply(const SparseVec& x) const;

  bool operator==(const SparseMat& o) const;
};

SparseMat mat_add(const SparseMat& a, const SparseMat& b);
SparseMat mat_scale(const Rat& c, const SparseMat& a);
// a after b (a.cols() == b.rows).
SparseMat mat_mul(const SparseMat& a, const SparseMat& b);
SparseMat mat_transpose(const SparseMat& a);

// First (column-lex, then row) position where the two differ; both must share
// shape. Returns {col,row} or {-1,-1} when equal.
std::pair<long, long> mat_first_diff(const SparseMat& a, const SparseMat& b);

// Flatten to a vector with index col*rows + row.
SparseVec mat_vec(const SparseMat& a);

// Kronecker-style tuple indexing: mixed-radix over factor dimensions,
// leftmost factor most significant.
struct MixedRadix {
  std::vector<int> dims;
  long total() const {
    long t = 1;
    for (int d : dims) t *= d;
    return t;
  }
  long index(const std::vector<int>& digits) const;
  std::vector<int> digits(long index) const;
};

}  // namespace webcalc
