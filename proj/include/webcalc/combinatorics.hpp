#pragma once

#include <string>
#include <vector>

#include "webcalc/algebra.hpp"

namespace webcalc {

// Color of the formal unit object 1 = sum of all idempotents. Strands of this
// color carry all of A; it is the ambient color of the Schur and U-dot layers.
constexpr int UNIT_COLOR = -1;

// Object of the web category: word of (color, thickness) parts. Colors index
// GoodPair::idems or are UNIT_COLOR. Reduced form has no zero parts; zero
// parts are tolerated as bookkeeping in unreduced grid views.
struct Obj {
  std::vector<std::pair<int, int>> parts;

  Obj() = default;
  Obj(std::initializer_list<std::pair<int, int>> p) : parts(p) {}

  int total() const;
  int count() const { return static_cast<int>(parts.size()); }
  Obj reduced() const;
  bool operator==(const Obj& o) const { return parts == o.parts; }
  bool operator<(const Obj& o) const { return parts < o.parts; }
  std::string str(const GoodPair* pair = nullptr) const;
};

Obj obj_concat(const Obj& a, const Obj& b);

// Restricted composition over one basis block: multiplicity per basis index,
// odd elements at most once. Entries sorted by basis index, no zeros.
struct RestrictedComposition {
  std::vector<std::pair<int, int>> mult;
  int size() const;
  int of(int b) const;
  bool operator==(const RestrictedComposition& o) const { return mult == o.mult; }
};

// Grid of restricted compositions indexing a basis diagram: rows = source
// parts, columns = target parts; cell (r,s) lives over the basis block
// {b : left(b) = color(dst_s), right(b) = color(src_r)} (all of B for unit
// colored strands).
struct MatrixComposition {
  int t = 0, u = 0;
  std::vector<RestrictedComposition> cell;  // row-major, size t*u
  const RestrictedComposition& at(int r, int s) const { return cell[r * u + s]; }
  RestrictedComposition& at(int r, int s) { return cell[r * u + s]; }
  bool operator==(const MatrixComposition& o) const {
    return t == o.t && u == o.u && cell == o.cell;
  }
  std::string str(const GoodPair& pair) const;
};

// Basis indices of the block jBi; colors may be UNIT_COLOR (full basis).
std::vector<int> basis_block(const GoodPair& pair, int left_color,
                             int right_color);

// All reduced colored compositions with <= n parts totalling d over ncolors
// colors (deduplicated by reduction; deterministic order).
std::vector<Obj> enum_colored(int ncolors, int n, int d);

// Unreduced single-color compositions of d into exactly n ordered
// nonnegative parts (the Schur grid Omega(n,d)).
std::vector<std::vector<int>> enum_compositions(int n, int d);

// Complete enumeration of M(src,dst) for the pair; empty when totals differ.
// Order: cells in (r,s) lex, flattened multiplicity vectors descending.
std::vector<MatrixComposition> enum_M(const GoodPair& pair, const Obj& src,
                                      const Obj& dst);

// Product of mult! over cells, restricted to basis elements with mask set.
Rat bang(const MatrixComposition& m, const std::vector<char>& mask);

std::vector<char> sub_mask(const GoodPair& pair);
std::vector<char> complement_mask(std::vector<char> mask);

using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;

// All multipartitions of d indexed by the pair's simple types at rank n:
// type-M factors range over hook partitions (lambda_{M+1} <= N with
// M = n*m_a, N = n*n_a), type-Q factors over strict partitions with <= n*n_a
// parts. Throws std::invalid_argument when the pair carries no simple data.
std::vector<Multipartition> enum_multipartitions(const GoodPair& pair, int n,
                                                 int d);

}  // namespace webcalc
