#include "webcalc/sparse.hpp"

#include <algorithm>

namespace webcalc {

Rat SparseVec::at(long i) const {
  auto it = std::lower_bound(
      e.begin(), e.end(), i,
      [](const std::pair<long, Rat>& p, long k) { return p.first < k; });
  if (it != e.end() && it->first == i) return it->second;
  return Rat(0);
}

void SparseVec::scale(const Rat& c) {
  if (c == 0) {
    e.clear();
    return;
  }
  for (auto& [i, v] : e) v *= c;
}

void SparseVec::axpy(const Rat& c, const SparseVec& w) {
  if (c == 0 || w.e.empty()) return;
  std::vector<std::pair<long, Rat>> out;
  out.reserve(e.size() + w.e.size());
  size_t a = 0, b = 0;
  while (a < e.size() || b < w.e.size()) {
    if (b == w.e.size() || (a < e.size() && e[a].first < w.e[b].first)) {
      out.push_back(std::move(e[a++]));
    } else if (a == e.size() || w.e[b].first < e[a].first) {
      out.emplace_back(w.e[b].first, c * w.e[b].second);
      ++b;
    } else {
      Rat v = e[a].second + c * w.e[b].second;
      if (v != 0) out.emplace_back(e[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  // Drop the zeros the w-only branch may have produced.
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& p) { return p.second == 0; }),
            out.end());
  e = std::move(out);
}

SparseVec SparseVecBuilder::build() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec v;
  v.e.reserve(terms.size());
  for (auto& [i, c] : terms) {
    if (!v.e.empty() && v.e.back().first == i)
      v.e.back().second += c;
    else
      v.e.emplace_back(i, c);
    if (v.e.back().second == 0) v.e.pop_back();
  }
  terms.clear();
  return v;
}

bool SparseMat::is_zero() const {
  for (const auto& c : col)
    if (!c.empty()) return false;
  return true;
}

size_t SparseMat::nnz() const {
  size_t t = 0;
  for (const auto& c : col) t += c.nnz();
  return t;
}

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.col[i] = SparseVec::unit(i);
  return m;
}

SparseVec SparseMat::apply(const SparseVec& x) const {
  SparseVec y;
  for (const auto& [j, c] : x.e) y.axpy(c, col[j]);
  return y;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows == o.rows && col == o.col;
}

SparseMat mat_add(const SparseMat& a, const SparseMat& b) {
  SparseMat m = a;
  for (int j = 0; j < b.cols(); ++j) m.col[j].axpy(Rat(1), b.col[j]);
  return m;
}

SparseMat mat_scale(const Rat& c, const SparseMat& a) {
  SparseMat m = a;
  for (auto& cl : m.col) cl.scale(c);
  return m;
}

SparseMat mat_mul(const SparseMat& a, const SparseMat& b) {
  SparseMat m(a.rows, b.cols());
  for (int j = 0; j < b.cols(); ++j) m.col[j] = a.apply(b.col[j]);
  return m;
}

SparseMat mat_transpose(const SparseMat& a) {
  SparseMat m(a.cols(), a.rows);
  std::vector<SparseVecBuilder> rows(a.rows);
  for (int j = 0; j < a.cols(); ++j)
    for (const auto& [i, c] : a.col[j].e) rows[i].add(j, c);
  for (int i = 0; i < a.rows; ++i) m.col[i] = rows[i].build();
  return m;
}

std::pair<long, long> mat_first_diff(const SparseMat& a, const SparseMat& b) {
  for (int j = 0; j < a.cols(); ++j) {
    if (a.col[j] == b.col[j]) continue;
    SparseVec d = a.col[j];
    d.axpy(Rat(-1), b.col[j]);
    return {j, d.lead()};
  }
  return {-1, -1};
}

SparseVec mat_vec(const SparseMat& a) {
  SparseVec v;
  for (int j = 0; j < a.cols(); ++j)
    for (const auto& [i, c] : a.col[j].e)
      v.e.emplace_back(static_cast<long>(j) * a.rows + i, c);
  return v;
}

long MixedRadix::index(const std::vector<int>& digits) const {
  long idx = 0;
  for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

std::vector<int> MixedRadix::digits(long index) const {
  std::vector<int> d(dims.size());
  for (size_t k = dims.size(); k-- > 0;) {
    d[k] = static_cast<int>(index % dims[k]);
    index /= dims[k];
  }
  return d;
}

}  // namespace webcalc
