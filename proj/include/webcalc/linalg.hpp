#pragma once

#include <optional>
#include <vector>

#include "webcalc/sparse.hpp"

namespace webcalc {

// Incremental exact echelon form over Q. Pivot of a stored row is its lowest
// nonzero index; rows are normalized to pivot coefficient 1 and kept sorted
// by pivot, so reduction is deterministic. With track=true every stored row
// also carries its expression over the inserted source vectors, which is what
// solve / nullspace / membership queries read off.
struct Echelon {
  struct Row {
    long pivot;
    SparseVec v;
    SparseVec rep;
  };

  bool track = false;
  long inserted = 0;
  std::vector<Row> rows;

  explicit Echelon(bool track_rep = false) : track(track_rep) {}

  long rank() const { return static_cast<long>(rows.size()); }

  // Inserts v as the next source vector; true when the span grew.
  bool insert(const SparseVec& v);

  // Like insert, but on a dependent vector returns the kernel combination
  // (coefficient 1 on this source). Requires track.
  std::optional<SparseVec> insert_or_kernel(const SparseVec& v);

  // Coefficients over the inserted sources expressing b, when b lies in the
  // span (sources that did not extend the span get coefficient 0).
  // Requires track.
  std::optional<SparseVec> express(const SparseVec& b) const;

  bool contains(const SparseVec& b) const;

 private:
  bool insert_impl(const SparseVec& v, SparseVec* kernel_out);
};

long sparse_rank(const SparseMat& a);

struct SolveResult {
  bool ok = false;
  SparseVec x;
};

// Exact solution of a x = b with free variables pinned to 0; ok=false means
// no solution exists. Unique when a has full column rank.
SolveResult sparse_solve(const SparseMat& a, const SparseVec& b);

// Basis of { x : a x = 0 }.
std::vector<SparseVec> sparse_nullspace(const SparseMat& a);

}  // namespace webcalc
