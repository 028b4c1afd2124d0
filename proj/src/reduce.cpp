#include <algorithm>

#include "webcalc/reduce.hpp"

namespace webcalc {

namespace {

// Column-major flattening of the evaluated matrix, streamed per column.
SparseVec flatten(Evaluator& ev, const WebMorphism& m) {
  CompiledMorphism cm = ev.compile(m);
  SparseVecBuilder b;
  for (long j = 0; j < cm.dom_dim; ++j) {
    SparseVec col = ev.apply(cm, SparseVec::unit(j, Rat(1)));
    for (const auto& [i, c] : col.e) b.add(j * cm.cod_dim + i, c);
  }
  return b.build();
}

}  // namespace

BasisCoordinates reduce_to_basis(const GoodPair& pair, const WebMorphism& m,
                                 EtaFlavor flavor) {
  BasisCoordinates out;
  out.src = m.dom.reduced();
  out.dst = m.cod.reduced();
  // Different sizes means the hom space is zero: no basis, no coordinates.
  if (out.src.total() != out.dst.total()) return out;
  int n = std::max(out.src.total(), 1);
  out.index = enum_M(pair, out.src, out.dst);
  Evaluator ev(pair, n);
  Echelon ech(true);
  for (const MatrixComposition& mu : out.index)
    ech.insert(flatten(ev, eta(pair, out.src, out.dst, mu, flavor)));
  std::optional<SparseVec> coords = ech.express(flatten(ev, m));
  if (!coords)
    throw InternalInconsistency("morphism escapes the basis span on " +
                                out.src.str(&pair) + " -> " +
                                out.dst.str(&pair));
  out.coeff = std::move(*coords);
  return out;
}

}  // namespace webcalc
