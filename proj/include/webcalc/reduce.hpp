#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "webcalc/eval.hpp"

namespace webcalc {

// Coordinates of a morphism against the ordered basis-diagram list for its
// endpoints; `index` follows enum_M order and `coeff` is sparse against it.
// Both are empty when the endpoint sizes differ (the hom space is zero).
struct BasisCoordinates {
  Obj src, dst;
  std::vector<MatrixComposition> index;
  SparseVec coeff;
};

// A morphism escaped the span of the basis diagrams; this never happens for
// well-typed input, so it signals a bug rather than bad data.
struct InternalInconsistency : std::logic_error {
  explicit InternalInconsistency(const std::string& what)
      : std::logic_error(what) {}
};

// Expresses m over the basis diagrams of its hom space. The comparison rank
// is max(total thickness, 1), the smallest faithful one.
BasisCoordinates reduce_to_basis(const GoodPair& pair, const WebMorphism& m,
                                 EtaFlavor flavor = EtaFlavor::A);

struct Verdict {
  bool equal = false;
  std::string witness;  // first differing entry, empty when equal
};

// One concrete parameter choice for a relation: both sides as morphisms plus
// a printable parameter assignment.
struct RelationInstance {
  std::string relation;
  std::string params;
  WebMorphism lhs, rhs;
};

// Relation registry. "defining" covers the presentation, "implied" the
// derived identities checked against it, "all" both.
std::vector<std::string> relation_ids(const std::string& set);

// Every instance of one relation with thickness parameters up to the bound,
// all colors of the pair, and coupon contents drawn from the basis.
std::vector<RelationInstance> relation_instances(const GoodPair& pair,
                                                 const std::string& relation_id,
                                                 int bound);

Verdict verify_instance(Evaluator& ev, const RelationInstance& inst);

// Verifies the single instance whose parameter string matches `params`
// exactly (as produced by relation_instances). Throws std::invalid_argument
// for an unknown relation id or unmatched parameter string.
Verdict verify_relation(const GoodPair& pair, const std::string& relation_id,
                        const std::string& params, int n);

struct SuiteLine {
  std::string relation;
  long instances = 0;
  long equal = 0;
  long unequal = 0;
  std::string witness;  // "params | first difference" of the first failure
  double seconds = 0;
};

struct SuiteReport {
  std::string pair_name;
  int bound = 0;
  int n = 0;
  std::string set;
  std::vector<SuiteLine> lines;
  long total = 0;
  long failed = 0;
  double seconds = 0;
  bool all_equal() const { return failed == 0; }
  std::string str() const;
};

// Sweeps every relation in the set over all parameter tuples with
// thicknesses <= bound and compares both sides under evaluation at rank n.
SuiteReport verify_suite(const GoodPair& pair, int bound, int n,
                         const std::string& set = "all", int jobs = 1);

}  // namespace webcalc
