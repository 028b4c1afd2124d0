#include "webcalc/howe.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "webcalc/combinatorics.hpp"
#include "webcalc/linalg.hpp"

namespace webcalc {

long HoweSpace::index_of(const std::vector<int>& mono) const {
  auto it = std::lower_bound(monos.begin(), monos.end(), mono);
  if (it == monos.end() || *it != mono) return -1;
  return it - monos.begin();
}

int HoweSpace::gen_id(int p, int q, int f) const {
  return ((p - 1) * n + (q - 1)) * pair.dim() + f;
}

std::vector<int> HoweSpace::left_weight(long i) const {
  std::vector<int> w(static_cast<size_t>(m), 0);
  for (int g : monos[i]) w[gens[g].p - 1]++;
  return w;
}

std::vector<int> HoweSpace::right_weight(long i) const {
  std::vector<int> w(static_cast<size_t>(n), 0);
  for (int g : monos[i]) w[gens[g].q - 1]++;
  return w;
}

HoweSpace build_space(const GoodPair& pair, int m, int n, int d) {
  if (m < 1 || n < 1 || d < 0)
    throw std::invalid_argument("build_space: bad parameters");
  HoweSpace sp;
  sp.pair = pair;
  sp.m = m;
  sp.n = n;
  sp.d = d;
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= n; ++q)
      for (int f = 0; f < pair.dim(); ++f) {
        sp.gens.push_back(HoweGen{p, q, f});
        sp.gpar.push_back(pair.basis[f].parity & 1);
      }
  const int ng = static_cast<int>(sp.gens.size());
  std::vector<int> word;
  // Nondecreasing generator words, odd generators without repeats; DFS in
  // ascending order so the final list is lex sorted.
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      sp.monos.push_back(word);
      return;
    }
    for (int g = start; g < ng; ++g) {
      word.push_back(g);
      self(self, sp.gpar[g] ? g + 1 : g, left - 1);
      word.pop_back();
    }
  };
  rec(rec, 0, d);
  return sp;
}

const SparseMat& HoweAction::at(int r, int s, int f) const {
  const int dimA = static_cast<int>(mats.size()) / (rank * rank);
  if (r < 1 || r > rank || s < 1 || s > rank || f < 0 || f >= dimA)
    throw std::invalid_argument("HoweAction: index out of range");
  return mats[((r - 1) * rank + (s - 1)) * dimA + f];
}

HoweAction action_matrices(const HoweSpace& space, Side side) {
  const GoodPair& pair = space.pair;
  const bool left = side == Side::Left;
  const int rank = left ? space.m : space.n;
  const int dimA = pair.dim();
  const long dim = space.dim();

  HoweAction act;
  act.side = side;
  act.rank = rank;
  act.mats.reserve(static_cast<size_t>(rank) * rank * dimA);

  for (int r = 1; r <= rank; ++r)
    for (int s = 1; s <= rank; ++s)
      for (int f = 0; f < dimA; ++f) {
        const Parity fpar = pair.basis[f].parity & 1;
        SparseMat mat(static_cast<int>(dim), static_cast<int>(dim));
        for (long j = 0; j < dim; ++j) {
          const std::vector<int>& mono = space.monos[j];
          SparseVecBuilder col;
          for (size_t t = 0; t < mono.size(); ++t) {
            const HoweGen& g = space.gens[mono[t]];
            if (left ? g.p != s : g.q != r) continue;
            const AlgebraElement& prod = left ? pair.basis_prod(f, g.f)
                                              : pair.basis_prod(g.f, f);
            if (prod.empty()) continue;
            // Leibniz sign: the acting element crosses everything before
            // (left action) or after (right action) the hit position.
            Parity ls = 0;
            if (fpar) {
              if (left) {
                for (size_t u = 0; u < t; ++u) ls ^= space.gpar[mono[u]];
              } else {
                for (size_t u = t + 1; u < mono.size(); ++u)
                  ls ^= space.gpar[mono[u]];
              }
            }
            for (const auto& [b, c] : prod.e) {
              const int nb = static_cast<int>(b);
              const int id2 = left ? space.gen_id(r, g.q, nb)
                                   : space.gen_id(g.p, s, nb);
              const Parity pb = space.gpar[id2];
              // Straighten: move the new generator to sorted position,
              // crossing smaller elements to the right of slot t and
              // larger ones to the left; a repeated odd generator is zero.
              Parity cross = 0;
              bool dead = false;
              for (size_t u = 0; u < mono.size(); ++u) {
                if (u == t) continue;
                if (mono[u] == id2 && pb) {
                  dead = true;
                  break;
                }
                if ((u < t && mono[u] > id2) || (u > t && mono[u] < id2))
                  cross ^= pb & space.gpar[mono[u]];
              }
              if (dead) continue;
              std::vector<int> next = mono;
              next.erase(next.begin() + static_cast<long>(t));
              next.insert(std::lower_bound(next.begin(), next.end(), id2),
                          id2);
              const long row = space.index_of(next);
              col.add(row, (ls ^ cross) ? Rat(-c) : c);
            }
          }
          mat.col[j] = col.build();
        }
        act.mats.push_back(std::move(mat));
      }
  return act;
}

namespace {

// Span of the unital algebra generated by the given matrices: breadth-first
// closure of {id} under left multiplication by generators.
long span_closure(const std::vector<SparseMat>& gens, long dim) {
  Echelon ech;
  std::vector<SparseMat> frontier;
  SparseMat id = SparseMat::identity(static_cast<int>(dim));
  if (ech.insert(mat_vec(id))) frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    std::vector<SparseMat> next;
    for (const SparseMat& x : frontier)
      for (const SparseMat& g : gens) {
        SparseMat p = mat_mul(g, x);
        if (ech.insert(mat_vec(p))) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return ech.rank();
}

// Dimension of the joint commutant of the given matrices, seeded with
// matrix units inside the given basis blocks. Callers guarantee any
// commutant element is block diagonal for these blocks.
long commutant_dim(const std::vector<SparseMat>& gens,
                   const std::vector<std::vector<long>>& blocks, long dim) {
  std::vector<SparseVec> basis;
  for (const auto& blk : blocks)
    for (long i : blk)
      for (long j : blk) basis.push_back(SparseVec::unit(j * dim + i));

  auto unflatten = [&](const SparseVec& v) {
    SparseMat m(static_cast<int>(dim), static_cast<int>(dim));
    for (const auto& [idx, c] : v.e)
      m.col[idx / dim].e.emplace_back(idx % dim, c);
    return m;
  };

  for (const SparseMat& g : gens) {
    if (basis.empty()) break;
    Echelon ech(true);
    std::vector<SparseVec> next;
    for (const SparseVec& xv : basis) {
      SparseMat x = unflatten(xv);
      SparseVec comm = mat_vec(mat_add(mat_mul(g, x), mat_scale(Rat(-1), mat_mul(x, g))));
      auto kern = ech.insert_or_kernel(comm);
      if (!kern) continue;
      SparseVec nx;
      for (const auto& [src, c] : kern->e) nx.axpy(c, basis[src]);
      if (!nx.empty()) next.push_back(std::move(nx));
    }
    basis = std::move(next);
  }
  return static_cast<long>(basis.size());
}

std::vector<std::vector<long>> weight_blocks(const HoweSpace& sp, Side side) {
  std::map<std::vector<int>, std::vector<long>> by;
  for (long i = 0; i < sp.dim(); ++i)
    by[side == Side::Left ? sp.left_weight(i) : sp.right_weight(i)].push_back(
        i);
  std::vector<std::vector<long>> out;
  out.reserve(by.size());
  for (auto& [w, idx] : by) out.push_back(std::move(idx));
  return out;
}

}  // namespace

std::string HoweReport::str() const {
  std::ostringstream os;
  os << pair_name << " S(m=" << m << ",n=" << n << ",d=" << d
     << "): dim " << dim_space << ", L " << dim_left << ", R " << dim_right
     << ", C(R) " << dim_cr << ", C(L) " << dim_cl;
  if (summands >= 0) os << ", expected summands " << summands;
  os << (right_centralizes && left_centralizes ? ": mutually centralizing"
                                               : ": NOT centralizing");
  if (!asserted) os << " (informational)";
  return os.str();
}

HoweReport double_centralizer_check(const GoodPair& pair, int m, int n,
                                    int d) {
  HoweSpace sp = build_space(pair, m, n, d);
  HoweAction lact = action_matrices(sp, Side::Left);
  HoweAction ract = action_matrices(sp, Side::Right);

  for (const SparseMat& x : lact.mats)
    for (const SparseMat& y : ract.mats)
      if (!(mat_mul(x, y) == mat_mul(y, x)))
        throw std::logic_error("howe: the two actions fail to commute");

  HoweReport rep;
  rep.pair_name = pair.name;
  rep.m = m;
  rep.n = n;
  rep.d = d;
  rep.dim_space = sp.dim();
  rep.asserted = pair.semisimple;
  rep.dim_left = span_closure(lact.mats, sp.dim());
  rep.dim_right = span_closure(ract.mats, sp.dim());
  // C(R) commutes with the right weight projections, hence is block
  // diagonal over gl_n-weights; C(L) over gl_m-weights.
  rep.dim_cr = commutant_dim(ract.mats, weight_blocks(sp, Side::Right),
                             sp.dim());
  rep.dim_cl = commutant_dim(lact.mats, weight_blocks(sp, Side::Left),
                             sp.dim());
  rep.right_centralizes = rep.dim_cr == rep.dim_left;
  rep.left_centralizes = rep.dim_cl == rep.dim_right;
  if (!pair.simples.empty())
    rep.summands = static_cast<long>(
        enum_multipartitions(pair, std::min(m, n), d).size());
  return rep;
}

}  // namespace webcalc
