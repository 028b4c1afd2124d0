#include "webcalc/linalg.hpp"

#include <algorithm>

namespace webcalc {

bool Echelon::insert_impl(const SparseVec& v, SparseVec* kernel_out) {
  SparseVec w = v;
  SparseVec rep = track ? SparseVec::unit(inserted) : SparseVec();
  ++inserted;
  for (const Row& r : rows) {
    if (w.empty() || w.lead() > r.pivot) continue;
    Rat c = w.at(r.pivot);
    if (c == 0) continue;
    w.axpy(-c, r.v);
    if (track) rep.axpy(-c, r.rep);
  }
  if (w.empty()) {
    if (kernel_out) *kernel_out = std::move(rep);
    return false;
  }
  Rat lc = w.e.front().second;
  Rat inv = rat(1) / lc;
  w.scale(inv);
  if (track) rep.scale(inv);
  Row nr{w.lead(), std::move(w), std::move(rep)};
  auto it = std::lower_bound(
      rows.begin(), rows.end(), nr.pivot,
      [](const Row& r, long p) { return r.pivot < p; });
  rows.insert(it, std::move(nr));
  return true;
}

bool Echelon::insert(const SparseVec& v) { return insert_impl(v, nullptr); }

std::optional<SparseVec> Echelon::insert_or_kernel(const SparseVec& v) {
  SparseVec k;
  if (insert_impl(v, &k)) return std::nullopt;
  return k;
}

std::optional<SparseVec> Echelon::express(const SparseVec& b) const {
  SparseVec w = b;
  SparseVec comb;
  for (const Row& r : rows) {
    if (w.empty() || w.lead() > r.pivot) continue;
    Rat c = w.at(r.pivot);
    if (c == 0) continue;
    w.axpy(-c, r.v);
    comb.axpy(c, r.rep);
  }
  if (!w.empty()) return std::nullopt;
  return comb;
}

bool Echelon::contains(const SparseVec& b) const {
  SparseVec w = b;
  for (const Row& r : rows) {
    if (w.empty()) break;
    if (w.lead() > r.pivot) continue;
    Rat c = w.at(r.pivot);
    if (c == 0) continue;
    w.axpy(-c, r.v);
  }
  return w.empty();
}

long sparse_rank(const SparseMat& a) {
  Echelon ech;
  for (const SparseVec& c : a.col) ech.insert(c);
  return ech.rank();
}

SolveResult sparse_solve(const SparseMat& a, const SparseVec& b) {
  Echelon ech(true);
  for (const SparseVec& c : a.col) ech.insert(c);
  SolveResult res;
  auto x = ech.express(b);
  if (!x) return res;
  res.ok = true;
  res.x = std::move(*x);
  return res;
}

std::vector<SparseVec> sparse_nullspace(const SparseMat& a) {
  Echelon ech(true);
  std::vector<SparseVec> basis;
  for (const SparseVec& c : a.col) {
    auto k = ech.insert_or_kernel(c);
    if (k) basis.push_back(std::move(*k));
  }
  return basis;
}

}  // namespace webcalc
