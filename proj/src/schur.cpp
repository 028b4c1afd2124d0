#include "webcalc/schur.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "webcalc/threads.hpp"

namespace webcalc {

namespace {

int par_of(const GoodPair& pair, int b) { return pair.basis[b].parity & 1; }

void check_rank_grade(const TensorMatrixElement& x, int n, int d,
                      const char* who) {
  if (x.n != n || x.d != d)
    throw std::invalid_argument(std::string(who) +
                                ": operands disagree on (n,d)");
}

void add_term(std::map<TensorKey, Rat>& terms, const TensorKey& k,
              const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

// Distributes the per-factor expansions of one product term over all basis
// choices, emitting rows*cols-keyed terms scaled by scale.
void distribute(std::map<TensorKey, Rat>& out,
                const std::vector<const AlgebraElement*>& factor,
                const std::vector<std::pair<int, int>>& pos, const Rat& scale) {
  TensorKey key(factor.size());
  Rat coeff;
  std::vector<size_t> pick(factor.size(), 0);
  for (;;) {
    coeff = scale;
    for (size_t g = 0; g < factor.size(); ++g) {
      const auto& [b, c] = factor[g]->e[pick[g]];
      key[g] = FactorKey{pos[g].first, pos[g].second, static_cast<int>(b)};
      coeff *= c;
    }
    add_term(out, key, coeff);
    size_t g = factor.size();
    while (g > 0) {
      --g;
      if (++pick[g] < factor[g]->e.size()) break;
      pick[g] = 0;
      if (g == 0) return;
    }
    if (factor.empty()) return;
  }
}

}  // namespace

Parity key_parity(const GoodPair& pair, const TensorKey& k) {
  int p = 0;
  for (const FactorKey& f : k) p ^= par_of(pair, f.b);
  return p;
}

TensorMatrixElement tme_zero(int n, int d) { return {n, d, {}}; }

TensorMatrixElement tme_atom(int n, const TensorKey& k, const Rat& c) {
  TensorMatrixElement x{n, static_cast<int>(k.size()), {}};
  if (c != 0) x.terms.emplace(k, c);
  return x;
}

TensorMatrixElement tme_one(const GoodPair& pair, int n, int d) {
  TensorMatrixElement x{n, d, {}};
  TensorKey key(d);
  std::vector<int> pick(d, 0);
  int choices = n * pair.colors();
  for (;;) {
    for (int g = 0; g < d; ++g) {
      int r = pick[g] / pair.colors() + 1;
      key[g] = FactorKey{r, r, pair.idems[pick[g] % pair.colors()]};
    }
    x.terms.emplace(key, Rat(1));
    int g = d;
    while (g > 0) {
      --g;
      if (++pick[g] < choices) break;
      pick[g] = 0;
      if (g == 0) return x;
    }
    if (d == 0) return x;
  }
}

TensorMatrixElement tme_add(const TensorMatrixElement& a,
                            const TensorMatrixElement& b) {
  check_rank_grade(b, a.n, a.d, "tme_add");
  TensorMatrixElement out = a;
  for (const auto& [k, c] : b.terms) add_term(out.terms, k, c);
  return out;
}

TensorMatrixElement tme_scale(const Rat& c, const TensorMatrixElement& a) {
  TensorMatrixElement out{a.n, a.d, {}};
  if (c == 0) return out;
  for (const auto& [k, v] : a.terms) out.terms.emplace(k, c * v);
  return out;
}

TensorMatrixElement tme_tensor(const TensorMatrixElement& a,
                               const TensorMatrixElement& b) {
  if (a.n != b.n)
    throw std::invalid_argument("tme_tensor: operands disagree on n");
  TensorMatrixElement out{a.n, a.d + b.d, {}};
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      TensorKey k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.terms.emplace(std::move(k), ca * cb);
    }
  return out;
}

TensorMatrixElement perm_act(const GoodPair& pair,
                             const TensorMatrixElement& x,
                             const std::vector<int>& tau) {
  int d = x.d;
  if (static_cast<int>(tau.size()) != d)
    throw std::invalid_argument("perm_act: permutation size mismatch");
  std::vector<char> seen(d, 0);
  for (int v : tau) {
    if (v < 0 || v >= d || seen[v])
      throw std::invalid_argument("perm_act: not a permutation");
    seen[v] = 1;
  }
  TensorMatrixElement out{x.n, d, {}};
  TensorKey nk(d);
  for (const auto& [k, c] : x.terms) {
    int sign = 0;
    for (int p = 0; p < d; ++p) {
      nk[p] = k[tau[p]];
      for (int q = p + 1; q < d; ++q)
        if (tau[p] > tau[q])
          sign ^= par_of(pair, k[tau[p]].b) & par_of(pair, k[tau[q]].b);
    }
    add_term(out.terms, nk, sign ? -c : c);
  }
  return out;
}

bool is_invariant(const GoodPair& pair, const TensorMatrixElement& x) {
  std::vector<int> tau(x.d);
  for (int k = 0; k + 1 < x.d; ++k) {
    for (int p = 0; p < x.d; ++p) tau[p] = p;
    std::swap(tau[k], tau[k + 1]);
    if (!(perm_act(pair, x, tau) == x)) return false;
  }
  return true;
}

std::vector<std::vector<int>> coset_reps(int d1, int d2) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("coset_reps: negative d");
  int d = d1 + d2;
  std::vector<std::vector<int>> reps;
  std::vector<int> sel(d1);
  for (int j = 0; j < d1; ++j) sel[j] = j;
  for (;;) {
    std::vector<int> word(d);
    std::vector<char> in(d, 0);
    for (int j = 0; j < d1; ++j) {
      word[sel[j]] = j;
      in[sel[j]] = 1;
    }
    int next = d1;
    for (int p = 0; p < d; ++p)
      if (!in[p]) word[p] = next++;
    reps.push_back(std::move(word));
    if (d1 == 0) break;
    int j = d1 - 1;
    while (j >= 0 && sel[j] == d - d1 + j) --j;
    if (j < 0) break;
    ++sel[j];
    for (int t = j + 1; t < d1; ++t) sel[t] = sel[t - 1] + 1;
  }
  return reps;
}

TensorMatrixElement star(const GoodPair& pair, const TensorMatrixElement& x,
                         const TensorMatrixElement& y) {
  if (x.n != y.n) throw std::invalid_argument("star: operands disagree on n");
  if (!is_invariant(pair, x) || !is_invariant(pair, y))
    throw std::invalid_argument("star: operand is not symmetric-invariant");
  TensorMatrixElement t = tme_tensor(x, y);
  TensorMatrixElement out = tme_zero(x.n, t.d);
  for (const auto& rep : coset_reps(x.d, y.d))
    out = tme_add(out, perm_act(pair, t, rep));
  return out;
}

TensorMatrixElement shifted_star(const GoodPair& pair,
                                 const TensorMatrixElement& x,
                                 const TensorMatrixElement& y) {
  int n = x.n + y.n;
  TensorMatrixElement xl{n, x.d, x.terms};
  TensorMatrixElement yr{n, y.d, {}};
  for (const auto& [k, c] : y.terms) {
    TensorKey nk = k;
    for (FactorKey& f : nk) {
      f.r += x.n;
      f.s += x.n;
    }
    yr.terms.emplace(std::move(nk), c);
  }
  return star(pair, xl, yr);
}

TensorMatrixElement eta_tilde(const GoodPair& pair, const MatrixComposition& m,
                              int n, int d) {
  if (m.t != n || m.u != n)
    throw std::invalid_argument("eta_tilde: grid is not n by n");
  int total = 0;
  for (const RestrictedComposition& rc : m.cell)
    for (const auto& [b, k] : rc.mult) {
      if (b < 0 || b >= pair.dim() || k <= 0 ||
          (par_of(pair, b) && k > 1))
        throw std::invalid_argument("eta_tilde: invalid multiplicity grid");
      total += k;
    }
  if (total != d)
    throw std::invalid_argument("eta_tilde: grid total differs from d");

  TensorMatrixElement acc = tme_atom(n, {});
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (const auto& [b, k] : m.at(r, s).mult) {
        TensorKey key(k, FactorKey{s + 1, r + 1, b});
        acc = star(pair, acc, tme_atom(n, key));
      }
  return tme_scale(bang(m, complement_mask(sub_mask(pair))), acc);
}

int WeightIdempotentIndex::d() const {
  int t = 0;
  for (const auto& [c, x] : parts) t += x;
  return t;
}

TensorMatrixElement xi_idem(const GoodPair& pair,
                            const WeightIdempotentIndex& ix) {
  int n = ix.n();
  TensorMatrixElement acc = tme_atom(n, {});
  for (int k = 0; k < n; ++k) {
    auto [color, x] = ix.parts[k];
    if (x < 0) throw std::invalid_argument("xi_idem: negative thickness");
    if (x == 0) continue;
    TensorMatrixElement base = tme_zero(n, 1);
    if (color == UNIT_COLOR) {
      for (int i : pair.idems)
        add_term(base.terms, {FactorKey{k + 1, k + 1, i}}, Rat(1));
    } else {
      if (color < 0 || color >= pair.colors())
        throw std::invalid_argument("xi_idem: color out of range");
      base = tme_atom(n, {FactorKey{k + 1, k + 1, pair.idems[color]}});
    }
    TensorMatrixElement power = tme_atom(n, {});
    for (int j = 0; j < x; ++j) power = tme_tensor(power, base);
    acc = star(pair, acc, power);
  }
  return acc;
}

TensorMatrixElement schur_mult(const GoodPair& pair,
                               const TensorMatrixElement& x,
                               const TensorMatrixElement& y) {
  check_rank_grade(y, x.n, x.d, "schur_mult");
  TensorMatrixElement out = tme_zero(x.n, x.d);
  std::vector<const AlgebraElement*> factor(x.d);
  std::vector<std::pair<int, int>> pos(x.d);
  for (const auto& [ka, ca] : x.terms)
    for (const auto& [kb, cb] : y.terms) {
      bool alive = true;
      int sign = 0;
      for (int g = 0; g < x.d && alive; ++g) {
        if (ka[g].s != kb[g].r) {
          alive = false;
          break;
        }
        const AlgebraElement& p = pair.basis_prod(ka[g].b, kb[g].b);
        if (p.empty()) {
          alive = false;
          break;
        }
        factor[g] = &p;
        pos[g] = {ka[g].r, kb[g].s};
        for (int q = 0; q < g; ++q)
          sign ^= par_of(pair, ka[g].b) & par_of(pair, kb[q].b);
      }
      if (!alive) continue;
      Rat scale = ca * cb;
      distribute(out.terms, factor, pos, sign ? -scale : scale);
    }
  return out;
}

VTensorBasis::VTensorBasis(const GoodPair& pair, int n_, int d_)
    : n(n_), adim(pair.dim()), d(d_) {
  if (n < 1 || d < 0) throw std::invalid_argument("VTensorBasis: bad shape");
}

long VTensorBasis::dim() const {
  long t = 1;
  for (int g = 0; g < d; ++g) t *= n * adim;
  return t;
}

long VTensorBasis::encode(const std::vector<std::pair<int, int>>& tuple) const {
  if (static_cast<int>(tuple.size()) != d)
    throw std::invalid_argument("VTensorBasis: tuple length mismatch");
  long idx = 0;
  for (const auto& [r, b] : tuple) {
    if (r < 1 || r > n || b < 0 || b >= adim)
      throw std::invalid_argument("VTensorBasis: entry out of range");
    idx = idx * (n * adim) + static_cast<long>(r - 1) * adim + b;
  }
  return idx;
}

std::vector<std::pair<int, int>> VTensorBasis::decode(long index) const {
  std::vector<std::pair<int, int>> tuple(d);
  for (int g = d - 1; g >= 0; --g) {
    long code = index % (n * adim);
    index /= n * adim;
    tuple[g] = {static_cast<int>(code / adim) + 1,
                static_cast<int>(code % adim)};
  }
  return tuple;
}

SparseMat tau_tilde(const GoodPair& pair, const TensorMatrixElement& x) {
  VTensorBasis vb(pair, x.n, x.d);
  long dim = vb.dim();
  SparseMat out(static_cast<int>(dim), static_cast<int>(dim));
  std::vector<const AlgebraElement*> factor(x.d);
  std::vector<std::pair<int, int>> pos(x.d);
  for (long j = 0; j < dim; ++j) {
    auto u = vb.decode(j);
    std::map<TensorKey, Rat> terms;
    for (const auto& [k, c] : x.terms) {
      bool alive = true;
      int sign = 0;
      for (int g = 0; g < x.d && alive; ++g) {
        if (k[g].s != u[g].first) {
          alive = false;
          break;
        }
        const AlgebraElement& p = pair.basis_prod(k[g].b, u[g].second);
        if (p.empty()) {
          alive = false;
          break;
        }
        factor[g] = &p;
        pos[g] = {k[g].r, 0};
        for (int q = 0; q < g; ++q)
          sign ^= par_of(pair, k[g].b) & par_of(pair, u[q].second);
      }
      if (!alive) continue;
      distribute(terms, factor, pos, sign ? -c : c);
    }
    SparseVecBuilder col;
    std::vector<std::pair<int, int>> w(x.d);
    for (const auto& [k, c] : terms) {
      for (int g = 0; g < x.d; ++g) w[g] = {k[g].r, k[g].b};
      col.add(vb.encode(w), c);
    }
    out.col[j] = col.build();
  }
  return out;
}

namespace {

// The direct sum of S^x V over x in Omega(n,d), with stable block addresses
// borrowed from the evaluator's caches.
struct SumBlocks {
  std::vector<std::vector<int>> comps;
  std::vector<const ModuleBasis*> mods;
  std::vector<long> offset;
  std::map<std::vector<int>, int> pos;
  long rows = 0;
};

SumBlocks make_blocks(Evaluator& ev, int d) {
  SumBlocks sb;
  sb.comps = enum_compositions(ev.rank(), d);
  for (int i = 0; i < static_cast<int>(sb.comps.size()); ++i) {
    const ModuleBasis& mb = ev.module_basis(weight_obj(sb.comps[i]));
    sb.mods.push_back(&mb);
    sb.offset.push_back(sb.rows);
    sb.rows += mb.dim();
    sb.pos.emplace(sb.comps[i], i);
  }
  return sb;
}

// Symmetrizes one tuple of (row, basis): block index of its weight, the flat
// monomial index inside that block, and the accumulated sign. False when a
// repeated odd variable kills the image.
bool chi_of_tuple(Evaluator& ev, const SumBlocks& sb,
                  const std::vector<std::pair<int, int>>& u, int& block,
                  long& flat, int& sign) {
  const GoodPair& pair = ev.pair();
  int n = ev.rank();
  std::vector<int> weight(n, 0);
  for (const auto& [r, b] : u) ++weight[r - 1];
  block = sb.pos.at(weight);

  sign = 1;
  for (size_t g = 0; g < u.size(); ++g)
    for (size_t h = g + 1; h < u.size(); ++h)
      if (u[h].first < u[g].first &&
          (par_of(pair, u[g].second) & par_of(pair, u[h].second)))
        sign = -sign;

  const ModuleBasis& mb = *sb.mods[block];
  flat = 0;
  size_t part = 0;
  for (int alpha = 1; alpha <= n; ++alpha) {
    if (weight[alpha - 1] == 0) continue;
    std::vector<std::pair<int, int>> factors;
    for (const auto& [r, b] : u)
      if (r == alpha) factors.emplace_back(alpha, b);
    int s = 1;
    if (!straighten(pair, factors, s)) return false;
    sign *= s;
    long idx = mb.parts[part]->index_of(SymMonomial{factors});
    if (idx < 0)
      throw std::logic_error("chi_of_tuple: monomial missing from basis");
    flat = flat * mb.parts[part]->dim() + idx;
    ++part;
  }
  return true;
}

}  // namespace

SparseMat chi_matrix(Evaluator& ev, int d) {
  SumBlocks sb = make_blocks(ev, d);
  VTensorBasis vb(ev.pair(), ev.rank(), d);
  SparseMat out(static_cast<int>(sb.rows), static_cast<int>(vb.dim()));
  for (long j = 0; j < vb.dim(); ++j) {
    int block, sign;
    long flat;
    if (chi_of_tuple(ev, sb, vb.decode(j), block, flat, sign))
      out.col[j] = SparseVec::unit(sb.offset[block] + flat, Rat(sign));
  }
  return out;
}

SparseMat tau_web(Evaluator& ev, const WebMorphism& m,
                  const std::vector<int>& x, const std::vector<int>& y) {
  int d = 0;
  for (int v : x) d += v;
  int dy = 0;
  for (int v : y) dy += v;
  if (dy != d) throw std::invalid_argument("tau_web: weights disagree on d");
  if (!m.is_zero() &&
      (!(m.dom == weight_obj(x)) || !(m.cod == weight_obj(y))))
    throw std::invalid_argument(
        "tau_web: morphism endpoints do not match the given weights");

  SumBlocks sb = make_blocks(ev, d);
  VTensorBasis vb(ev.pair(), ev.rank(), d);
  SparseMat out(static_cast<int>(sb.rows), static_cast<int>(vb.dim()));
  if (m.is_zero()) return out;
  int xb = sb.pos.at(x);
  long cod_off = sb.offset[sb.pos.at(y)];
  CompiledMorphism cm = ev.compile(m);

  for (long j = 0; j < vb.dim(); ++j) {
    int block, sign;
    long flat;
    if (!chi_of_tuple(ev, sb, vb.decode(j), block, flat, sign)) continue;
    if (block != xb) continue;
    SparseVec v = ev.apply(cm, SparseVec::unit(flat, Rat(sign)));
    SparseVecBuilder col;
    for (const auto& [i, c] : v.e) col.add(cod_off + i, c);
    out.col[j] = col.build();
  }
  return out;
}

long schur_dim(const GoodPair& pair, int n, int d) {
  auto comps = enum_compositions(n, d);
  long total = 0;
  for (const auto& x : comps)
    for (const auto& y : comps)
      total += static_cast<long>(
          enum_M(pair, weight_obj(x), weight_obj(y)).size());
  return total;
}

// Reduced grid over the nonzero parts of (x,y), reinstated into the full
// n-by-n Schur grid.
MatrixComposition embed_grid(const MatrixComposition& g,
                             const std::vector<int>& x,
                             const std::vector<int>& y) {
  std::vector<int> rows, cols;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (x[i] > 0) rows.push_back(i);
  for (int i = 0; i < static_cast<int>(y.size()); ++i)
    if (y[i] > 0) cols.push_back(i);
  if (g.t != static_cast<int>(rows.size()) ||
      g.u != static_cast<int>(cols.size()))
    throw std::invalid_argument("embed_grid: shape mismatch");
  MatrixComposition m;
  m.t = static_cast<int>(x.size());
  m.u = static_cast<int>(y.size());
  m.cell.resize(static_cast<size_t>(m.t) * m.u);
  for (int r = 0; r < g.t; ++r)
    for (int s = 0; s < g.u; ++s) m.at(rows[r], cols[s]) = g.at(r, s);
  return m;
}

namespace {

SparseVec flatten_tme(const TensorMatrixElement& x,
                      const std::map<TensorKey, long>& ids) {
  SparseVecBuilder b;
  for (const auto& [k, c] : x.terms) b.add(ids.at(k), c);
  return b.build();
}

}  // namespace

Verdict check_web_schur_iso(const GoodPair& pair, int n, int d, int jobs) {
  Evaluator ev(pair, n);
  SumBlocks sb = make_blocks(ev, d);
  SparseMat chi = chi_matrix(ev, d);

  struct Item {
    int xi, yi;
    MatrixComposition reduced, full;
  };
  std::vector<Item> items;
  for (int xi = 0; xi < static_cast<int>(sb.comps.size()); ++xi)
    for (int yi = 0; yi < static_cast<int>(sb.comps.size()); ++yi) {
      Obj ox = weight_obj(sb.comps[xi]);
      Obj oy = weight_obj(sb.comps[yi]);
      for (const MatrixComposition& g : enum_M(pair, ox, oy))
        items.push_back(
            {xi, yi, g, embed_grid(g, sb.comps[xi], sb.comps[yi])});
    }

  Verdict verdict{true, ""};
  std::mutex mu;
  std::atomic<bool> bad{false};
  parallel_for(static_cast<long>(items.size()), jobs, [&](long idx) {
    if (bad.load()) return;
    const Item& it = items[idx];
    const auto& x = sb.comps[it.xi];
    const auto& y = sb.comps[it.yi];
    WebMorphism h =
        eta(pair, weight_obj(x), weight_obj(y), it.reduced, EtaFlavor::A);
    SparseMat web = tau_web(ev, h, x, y);
    SparseMat schur =
        mat_mul(chi, tau_tilde(pair, eta_tilde(pair, it.full, n, d)));
    auto diff = mat_first_diff(web, schur);
    if (diff.first >= 0) {
      std::lock_guard<std::mutex> lock(mu);
      if (!bad.exchange(true)) {
        std::ostringstream os;
        os << "action mismatch for " << it.full.str(pair) << " at row "
           << diff.second << ", col " << diff.first << ": web "
           << rat_str(web.col[diff.first].at(diff.second)) << " vs schur "
           << rat_str(schur.col[diff.first].at(diff.second));
        verdict = {false, os.str()};
      }
    }
  });
  if (!verdict.equal) return verdict;

  // Structure constants on a deterministic sample of composable products.
  struct Prod {
    const Item* f;  // x -> y
    const Item* g;  // y -> z
  };
  std::vector<Prod> prods;
  for (const Item& f : items)
    for (const Item& g : items)
      if (f.yi == g.xi) prods.push_back({&f, &g});
  size_t stride = std::max<size_t>(1, prods.size() / 60);
  for (size_t p = 0; p < prods.size(); p += stride) {
    const Item& f = *prods[p].f;
    const Item& g = *prods[p].g;
    const auto& x = sb.comps[f.xi];
    const auto& y = sb.comps[f.yi];
    const auto& z = sb.comps[g.yi];
    Obj ox = weight_obj(x), oy = weight_obj(y), oz = weight_obj(z);

    WebMorphism wf = eta(pair, ox, oy, f.reduced, EtaFlavor::A);
    WebMorphism wg = eta(pair, oy, oz, g.reduced, EtaFlavor::A);
    BasisCoordinates bc = reduce_to_basis(pair, compose(wg, wf));

    TensorMatrixElement prod =
        schur_mult(pair, eta_tilde(pair, g.full, n, d),
                   eta_tilde(pair, f.full, n, d));
    std::vector<TensorMatrixElement> lam;
    for (const MatrixComposition& l : enum_M(pair, ox, oz))
      lam.push_back(eta_tilde(pair, embed_grid(l, x, z), n, d));
    std::map<TensorKey, long> ids;
    for (const auto& e : lam)
      for (const auto& [k, c] : e.terms) ids.emplace(k, 0);
    for (const auto& [k, c] : prod.terms) ids.emplace(k, 0);
    long next = 0;
    for (auto& [k, id] : ids) id = next++;
    Echelon ech(true);
    for (const auto& e : lam) ech.insert(flatten_tme(e, ids));
    auto coords = ech.express(flatten_tme(prod, ids));
    if (!coords) {
      std::ostringstream os;
      os << "schur product escapes the basis span for " << f.full.str(pair)
         << " then " << g.full.str(pair);
      return {false, os.str()};
    }
    if (!(*coords == bc.coeff)) {
      std::ostringstream os;
      os << "structure constants differ for " << f.full.str(pair) << " then "
         << g.full.str(pair);
      return {false, os.str()};
    }
  }
  return verdict;
}

std::string tme_str(const GoodPair& pair, const TensorMatrixElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*";
    if (k.empty()) os << "[]";
    for (size_t g = 0; g < k.size(); ++g) {
      if (g) os << "(x)";
      os << "E^" << pair.basis[k[g].b].id << "_{" << k[g].r << "," << k[g].s
         << "}";
    }
  }
  return os.str();
}

std::string tme_export(const GoodPair& pair, const TensorMatrixElement& x) {
  std::ostringstream os;
  for (const auto& [k, c] : x.terms) {
    os << "r=(";
    for (size_t g = 0; g < k.size(); ++g) os << (g ? "," : "") << k[g].r;
    os << ") s=(";
    for (size_t g = 0; g < k.size(); ++g) os << (g ? "," : "") << k[g].s;
    os << ") b=(";
    for (size_t g = 0; g < k.size(); ++g)
      os << (g ? "," : "") << pair.basis[k[g].b].id;
    os << ") " << rat_str(c) << "\n";
  }
  return os.str();
}

std::string schur_dim_csv(const GoodPair& pair, int n_max, int d_max) {
  std::ostringstream os;
  os << "n,d,dim\n";
  for (int n = 1; n <= n_max; ++n)
    for (int d = 0; d <= d_max; ++d)
      os << n << "," << d << "," << schur_dim(pair, n, d) << "\n";
  return os.str();
}

}  // namespace webcalc
