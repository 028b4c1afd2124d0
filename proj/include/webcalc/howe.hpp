#pragma once

#include <string>
#include <vector>

#include "webcalc/algebra.hpp"
#include "webcalc/sparse.hpp"

namespace webcalc {

// Generator z^f_{p,q} of the symmetric space on V_m (x)_A V_n: p is the
// row index in [1,m], q the column index in [1,n], f a basis index of A.
// The bimodule relation v_p^f (x) v_q^g = z^{fg}_{p,q} is baked in by only
// ever carrying one algebra label per generator.
struct HoweGen {
  int p = 1, q = 1;
  int f = 0;
};

// Degree-d slice of the supersymmetric algebra on the generators above.
// Basis monomials are nondecreasing generator words; odd generators never
// repeat. Bigraded by gl_m-weight (row counts) and gl_n-weight (column
// counts); the weight blocks partition the basis.
struct HoweSpace {
  GoodPair pair;
  int m = 1, n = 1, d = 0;
  std::vector<HoweGen> gens;
  std::vector<Parity> gpar;
  std::vector<std::vector<int>> monos;  // sorted generator ids, length d

  long dim() const { return static_cast<long>(monos.size()); }
  long index_of(const std::vector<int>& mono) const;  // -1 when absent
  int gen_id(int p, int q, int f) const;
  std::vector<int> left_weight(long i) const;   // lambda, length m
  std::vector<int> right_weight(long i) const;  // mu, length n
};

HoweSpace build_space(const GoodPair& pair, int m, int n, int d);

enum class Side { Left, Right };

// Exact matrices of the generators E^f_{r,s} acting on the space, left via
// rows (rank m) or right via columns (rank n), extended from generators by
// the graded Leibniz rule. mats index: ((r-1)*rank + (s-1))*dimA + f.
struct HoweAction {
  Side side = Side::Left;
  int rank = 1;
  std::vector<SparseMat> mats;
  const SparseMat& at(int r, int s, int f) const;
};

HoweAction action_matrices(const HoweSpace& space, Side side);

struct HoweReport {
  std::string pair_name;
  int m = 1, n = 1, d = 0;
  long dim_space = 0;
  long dim_left = 0;    // span closure of the left action algebra
  long dim_right = 0;   // span closure of the right action algebra
  long dim_cl = 0;      // commutant of the left algebra
  long dim_cr = 0;      // commutant of the right algebra
  long summands = -1;   // expected simple bimodule count; -1 when unknown
  bool right_centralizes = false;  // C(R) = span of the left algebra
  bool left_centralizes = false;   // C(L) = span of the right algebra
  bool asserted = false;           // pair flagged semisimple
  std::string str() const;
};

// Builds the degree-d space, closes both action algebras under products,
// computes both commutants exactly, and compares dimensions. Left/right
// generator commutation is checked on the way and a failure throws.
HoweReport double_centralizer_check(const GoodPair& pair, int m, int n, int d);

}  // namespace webcalc
