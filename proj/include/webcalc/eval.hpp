#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "webcalc/diagram.hpp"
#include "webcalc/linalg.hpp"

namespace webcalc {

// Monomial in the variables v_k^b: factors (slot k in [1,n], basis index b
// with left idempotent matching the strand color), kept sorted by (k, b).
// Restricted: odd variables appear at most once.
struct SymMonomial {
  std::vector<std::pair<int, int>> factors;
  bool operator==(const SymMonomial& o) const { return factors == o.factors; }
  bool operator<(const SymMonomial& o) const { return factors < o.factors; }
  Parity parity(const GoodPair& pair) const;
  std::string str(const GoodPair& pair) const;
};

// Sorts factors into canonical order with the Koszul sign; false when a
// repeated odd variable kills the monomial.
bool straighten(const GoodPair& pair, std::vector<std::pair<int, int>>& factors,
                int& sign);

// Ordered basis of one part S^x_i V_n.
struct SymBasis {
  int color, x, n;
  std::vector<SymMonomial> monos;
  std::vector<char> par;  // parity per monomial
  long dim() const { return static_cast<long>(monos.size()); }
  long index_of(const SymMonomial& m) const;
};

// Tensor-product basis over the parts of an object; flat indices run with the
// leftmost part most significant. Carries a full parity table.
struct ModuleBasis {
  Obj object;
  std::vector<const SymBasis*> parts;
  long dimension = 1;
  std::vector<char> par;  // parity per flat index
  long dim() const { return dimension; }
  std::string mono_str(const GoodPair& pair, long index) const;
};

// One whiskered layer lowered to raw tables for streaming application.
struct LayerPlan {
  const SparseMat* box;
  long dmi, dmo, dr;
  const std::vector<char>* left_par;
  const std::vector<char>* in_par;
  const std::vector<char>* out_par;
};

// A morphism lowered against a fixed rank: per term, coefficient plus layer
// plans, ready for per-column streaming with no cache traffic.
struct CompiledMorphism {
  Obj dom, cod;
  long dom_dim, cod_dim;
  struct Term {
    Rat coeff;
    std::vector<LayerPlan> layers;
  };
  std::vector<Term> terms;
};

// The defining representation at rank n: evaluates boxes, diagrams, and
// formal combinations as exact sparse matrices over the canonical bases.
// Caches are internally synchronized; compiled morphisms hold pointers into
// the owning evaluator and must not outlive it.
class Evaluator {
 public:
  Evaluator(const GoodPair& pair, int n);

  const GoodPair& pair() const { return pair_; }
  int rank() const { return n_; }

  const SymBasis& sym_basis(int color, int x);
  const ModuleBasis& module_basis(const Obj& o);
  const SparseMat& box_matrix(const Box& b);

  CompiledMorphism compile(const WebMorphism& m);
  SparseVec apply(const CompiledMorphism& cm, const SparseVec& x) const;

  SparseVec apply(const WebMorphism& m, const SparseVec& x);
  SparseMat eval(const WebMorphism& m);

  // Streams both sides column by column, stopping at the first difference;
  // empty string when the matrices agree.
  std::string first_difference(const WebMorphism& a, const WebMorphism& b);

  // Coordinate-list export (row, col, value) with basis legends.
  std::string export_matrix(const WebMorphism& m);

 private:
  SparseMat build_box(const Box& b);

  const GoodPair& pair_;
  int n_;
  std::mutex mu_;
  std::map<std::pair<int, int>, std::unique_ptr<SymBasis>> sym_;
  std::map<Obj, std::unique_ptr<ModuleBasis>> mod_;
  std::map<std::string, std::unique_ptr<SparseMat>> box_;
};

}  // namespace webcalc
