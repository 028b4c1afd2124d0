#pragma once

#include <map>
#include <string>
#include <vector>

#include "webcalc/eval.hpp"
#include "webcalc/reduce.hpp"

namespace webcalc {

// One tensor factor E^b_{r,s}: basis element b placed in matrix position
// (row r, col s), 1-based.
struct FactorKey {
  int r = 1, s = 1, b = 0;
  auto operator<=>(const FactorKey&) const = default;
};

using TensorKey = std::vector<FactorKey>;

// Sparse element of M_n(A)^{(x) d} over the basis of pure tensors of matrix
// units. Terms sorted by key, no stored zeros.
struct TensorMatrixElement {
  int n = 1, d = 0;
  std::map<TensorKey, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const TensorMatrixElement& o) const {
    return n == o.n && d == o.d && terms == o.terms;
  }
};

Parity key_parity(const GoodPair& pair, const TensorKey& k);

TensorMatrixElement tme_zero(int n, int d);
TensorMatrixElement tme_atom(int n, const TensorKey& k, const Rat& c = Rat(1));
// Identity of M_n(A)^{(x) d}.
TensorMatrixElement tme_one(const GoodPair& pair, int n, int d);
TensorMatrixElement tme_add(const TensorMatrixElement& a,
                            const TensorMatrixElement& b);
TensorMatrixElement tme_scale(const Rat& c, const TensorMatrixElement& a);
// Plain tensor concatenation, no symmetrization.
TensorMatrixElement tme_tensor(const TensorMatrixElement& a,
                               const TensorMatrixElement& b);

// Right action by the signed place permutation: factor p of the result is
// factor tau[p] of x; each factor pair whose relative order flips contributes
// the product of parities. tau is a 0-based one-line permutation of [0,d).
TensorMatrixElement perm_act(const GoodPair& pair,
                             const TensorMatrixElement& x,
                             const std::vector<int>& tau);

// Fixed by every place permutation (checked on adjacent transpositions).
bool is_invariant(const GoodPair& pair, const TensorMatrixElement& x);

// Minimal-length representatives of the right cosets
// (S_{d1} x S_{d2}) \ S_{d1+d2}, as 0-based one-line words in lexicographic
// order. Count is binom(d1+d2, d1).
std::vector<std::vector<int>> coset_reps(int d1, int d2);

// Star product: sum of (x (x) y)^sigma over coset_reps(x.d, y.d). Inputs must
// be invariant; throws std::invalid_argument otherwise.
TensorMatrixElement star(const GoodPair& pair, const TensorMatrixElement& x,
                         const TensorMatrixElement& y);

// Star after the side embeddings: x keeps its row/col indices inside
// M_{x.n+y.n}(A), y has both indices shifted by x.n.
TensorMatrixElement shifted_star(const GoodPair& pair,
                                 const TensorMatrixElement& x,
                                 const TensorMatrixElement& y);

// Schur-side basis element: [mu]!_{B\b} times the nested star of
// (E^b_{s,r})^{(x) mu_{r,s}(b)} taken over source parts r, target parts s,
// then basis b, in that order. m must be an n-by-n grid totalling d whose
// cells live over the full basis.
TensorMatrixElement eta_tilde(const GoodPair& pair, const MatrixComposition& m,
                              int n, int d);

// Unreduced colored composition indexing a weight idempotent: exactly n
// parts, zeros allowed, totalling d. UNIT_COLOR parts carry the full unit.
struct WeightIdempotentIndex {
  std::vector<std::pair<int, int>> parts;  // (color, thickness)
  int n() const { return static_cast<int>(parts.size()); }
  int d() const;
};

// xi = (E^{i_1}_{1,1})^{(x) x_1} * ... * (E^{i_n}_{n,n})^{(x) x_n}.
TensorMatrixElement xi_idem(const GoodPair& pair,
                            const WeightIdempotentIndex& ix);

// Factorwise matrix product with the Koszul sign over crossed factor pairs.
TensorMatrixElement schur_mult(const GoodPair& pair,
                               const TensorMatrixElement& x,
                               const TensorMatrixElement& y);

// Canonical basis of V_n^{(x) d}: tuples of (row in [1,n], basis index),
// flattened with the leftmost factor most significant.
struct VTensorBasis {
  int n = 1, adim = 1, d = 0;
  VTensorBasis(const GoodPair& pair, int n_, int d_);
  long dim() const;
  long encode(const std::vector<std::pair<int, int>>& tuple) const;
  std::vector<std::pair<int, int>> decode(long index) const;
};

// Left-multiplication action of x on V_n^{(x) d}.
SparseMat tau_tilde(const GoodPair& pair, const TensorMatrixElement& x);

// Matrix of the symmetrization map from V_n^{(x) d} into the direct sum of
// S^x V over x in Omega(n,d); blocks follow enum_compositions order. Columns
// carrying a repeated odd variable map to zero.
SparseMat chi_matrix(Evaluator& ev, int d);

// Web-side action landing in the same direct sum: the evaluated morphism,
// placed in the block of its target weight y, composed with the
// symmetrization of the source weight x. m must run from weight x to weight
// y (unreduced compositions in Omega(rank, d)).
SparseMat tau_web(Evaluator& ev, const WebMorphism& m,
                  const std::vector<int>& x, const std::vector<int>& y);

// dim T^A_a(n,d): total grid count over Omega(n,d)^2.
long schur_dim(const GoodPair& pair, int n, int d);

// Grid over the nonzero parts of (x,y), reinstated into the full grid with
// one row per part of x and one column per part of y.
MatrixComposition embed_grid(const MatrixComposition& g,
                             const std::vector<int>& x,
                             const std::vector<int>& y);

// For every grid mu over Omega(n,d)^2, checks that the web action and the
// Schur action agree on V_n^{(x) d}, then checks structure constants of a
// deterministic sample of composable basis products.
Verdict check_web_schur_iso(const GoodPair& pair, int n, int d, int jobs = 1);

std::string tme_str(const GoodPair& pair, const TensorMatrixElement& x);
// One line per term: (r-tuple, s-tuple, b-tuple, coefficient).
std::string tme_export(const GoodPair& pair, const TensorMatrixElement& x);
// CSV rows "n,d,dim" for 1 <= n <= n_max, 0 <= d <= d_max.
std::string schur_dim_csv(const GoodPair& pair, int n_max, int d_max);

}  // namespace webcalc
