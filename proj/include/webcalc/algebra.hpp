#pragma once

#include <optional>
#include <string>
#include <vector>

#include "webcalc/sparse.hpp"

namespace webcalc {

// Element of A as a sparse combination of basis elements (indices into
// GoodPair::basis).
using AlgebraElement = SparseVec;

struct BasisElement {
  std::string id;
  int left;    // basis index of the left idempotent j (element lies in jAi)
  int right;   // basis index of the right idempotent i
  Parity parity = 0;
  bool in_sub = false;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};

// A good pair (A,a)_I: locally unital superalgebra with distinguished
// idempotents I, ordered homogeneous basis B (declared order is the total
// order used by basis diagram constructions), sub-basis b of the even
// subalgebra a, and a basis-indexed product table.
struct GoodPair {
  std::string name;
  std::vector<BasisElement> basis;
  std::vector<int> idems;  // basis indices, in I order
  // prod[l][r] = expansion of basis[l]*basis[r]; absent products are zero.
  std::vector<std::vector<AlgebraElement>> prod;
  bool semisimple = false;

  // Graded dimensions of the simple supermodules, when known; empty means
  // unavailable (multipartition enumeration refuses).
  struct SimpleType {
    char kind;  // 'M' or 'Q'
    int m, n;
  };
  std::vector<SimpleType> simples;

  int dim() const { return static_cast<int>(basis.size()); }
  int colors() const { return static_cast<int>(idems.size()); }

  int index_of(const std::string& id) const;
  // I-index of a basis element that is an idempotent; -1 otherwise.
  int color_of(int b) const;

  const AlgebraElement& basis_prod(int l, int r) const { return prod[l][r]; }
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement unit() const;

  // Parity when homogeneous, nullopt for mixed or zero... zero counts as even.
  std::optional<Parity> parity_of(const AlgebraElement& x) const;
  bool in_sub_span(const AlgebraElement& x) const;

  ValidationReport validate() const;

  // Auto-derives idempotent unit actions for absent table entries. Called by
  // builders; explicit entries are kept as declared.
  void finalize();

  // Test hook: overwrite one product table entry (negative controls).
  void set_product(int l, int r, AlgebraElement v) { prod[l][r] = std::move(v); }
};

// name ∈ {trivial, cyclic(r), clifford1, kxk, zigzag(Am) | zigzag(m)}.
// Throws std::invalid_argument on unknown family or bad parameter.
GoodPair builtin_pair(const std::string& name);

// Same algebra with sub reflagged to the idempotents only (the pair (A,kI)).
GoodPair make_subpair_kI(const GoodPair& p);

struct AlgebraFileError : std::runtime_error {
  explicit AlgebraFileError(const std::string& m) : std::runtime_error(m) {}
};

// Loads the JSON schema {name, idempotents, basis, sub, products}; errors
// reference field paths. The result is finalized but not validated.
GoodPair pair_from_json(const std::string& text);

std::string elem_str(const GoodPair& p, const AlgebraElement& x);

}  // namespace webcalc
