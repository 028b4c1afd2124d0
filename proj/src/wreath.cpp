#include "webcalc/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "webcalc/combinatorics.hpp"
#include "webcalc/linalg.hpp"
#include "webcalc/schur.hpp"
#include "webcalc/threads.hpp"

namespace webcalc {

namespace {

int par_of(const GoodPair& pair, int b) { return pair.basis[b].parity & 1; }

// Sign parity picked up when factor a moves to position perm[a]: inverted
// pairs of odd factors, parities read at the source slots.
int place_sign(const std::vector<int>& perm, const std::vector<int>& par) {
  int s = 0;
  for (size_t a = 0; a + 1 < perm.size(); ++a)
    for (size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) s ^= par[a] & par[b];
  return s;
}

// <tau; f>: place action of tau on the f-tuple, parities read at the
// permuted slots. Right-action convention, the same one eta-tilde uses.
int twist_sign(const std::vector<int>& tau, const std::vector<int>& fpar) {
  int s = 0;
  for (size_t p = 0; p + 1 < tau.size(); ++p)
    for (size_t q = p + 1; q < tau.size(); ++q)
      if (tau[p] > tau[q]) s ^= fpar[tau[p]] & fpar[tau[q]];
  return s;
}

void add_term(WreathElement& out, WreathKey k, const Rat& c) {
  if (c == 0) return;
  auto it = out.terms.find(k);
  if (it == out.terms.end()) {
    out.terms.emplace(std::move(k), c);
    return;
  }
  it->second += c;
  if (it->second == 0) out.terms.erase(it);
}

void check_perm(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p])
      throw std::invalid_argument("wreath: not a permutation");
    seen[p] = 1;
  }
}

std::vector<std::vector<int>> all_perms(int d) {
  std::vector<int> p(static_cast<size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// All length-d words over [0, radix); the empty word when d = 0.
std::vector<std::vector<int>> all_words(int radix, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<size_t>(d), 0);
  while (true) {
    out.push_back(w);
    int k = d - 1;
    for (; k >= 0; --k) {
      if (++w[k] < radix) break;
      w[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace

WreathElement wr_zero(int d) {
  if (d < 0) throw std::invalid_argument("wreath: negative length");
  WreathElement x;
  x.d = d;
  return x;
}

WreathElement wr_atom(std::vector<int> perm, std::vector<int> tuple,
                      const Rat& c) {
  if (perm.size() != tuple.size())
    throw std::invalid_argument("wreath: perm/tuple length mismatch");
  check_perm(perm);
  WreathElement x = wr_zero(static_cast<int>(perm.size()));
  if (c != 0) x.terms.emplace(WreathKey{std::move(perm), std::move(tuple)}, c);
  return x;
}

WreathElement wr_add(const WreathElement& x, const WreathElement& y) {
  if (x.d != y.d) throw std::invalid_argument("wreath: length mismatch");
  WreathElement out = x;
  for (const auto& [k, c] : y.terms) add_term(out, k, c);
  return out;
}

WreathElement wr_scale(const Rat& c, const WreathElement& x) {
  WreathElement out = wr_zero(x.d);
  if (c == 0) return out;
  for (const auto& [k, v] : x.terms) out.terms.emplace(k, c * v);
  return out;
}

Parity wreath_parity(const GoodPair& pair, const WreathKey& k) {
  int s = 0;
  for (int b : k.tuple) s ^= par_of(pair, b);
  return s;
}

std::vector<WreathKey> wreath_basis(const GoodPair& pair, int d) {
  if (d < 0) throw std::invalid_argument("wreath: negative length");
  std::vector<WreathKey> out;
  const auto perms = all_perms(d);
  const auto tuples = all_words(pair.dim(), d);
  out.reserve(perms.size() * tuples.size());
  for (const auto& p : perms)
    for (const auto& t : tuples) out.push_back(WreathKey{p, t});
  return out;
}

long wreath_dim(const GoodPair& pair, int d) {
  // d! times the sum over source/target colorings of the block dimension
  // products; every basis element lies in exactly one block, so the sum
  // telescopes to dim(A)^d.
  long colorings = 0;
  for (const auto& wi : all_words(pair.colors(), d))
    for (const auto& wj : all_words(pair.colors(), d)) {
      long p = 1;
      for (int k = 0; k < d && p > 0; ++k)
        p *= static_cast<long>(basis_block(pair, wj[k], wi[k]).size());
      colorings += p;
    }
  return factorial(d).get_si() * colorings;
}

WreathElement wreath_mult(const GoodPair& pair, const WreathElement& x,
                          const WreathElement& y) {
  if (x.d != y.d) throw std::invalid_argument("wreath_mult: length mismatch");
  const int d = x.d;
  WreathElement out = wr_zero(d);
  for (const auto& [ka, ca] : x.terms) {
    std::vector<int> fpar(d);
    for (int k = 0; k < d; ++k) fpar[k] = par_of(pair, ka.tuple[k]);
    for (const auto& [kb, cb] : y.terms) {
      const std::vector<int>& tau = kb.perm;
      Rat base = ca * cb;
      // Two signs: the place action of tau on the left tuple, then the
      // factorwise product (f.tau)*g in the tensor superalgebra, where
      // (f.tau)_q still crosses g_p for p < q.
      Parity sg = twist_sign(tau, fpar);
      Parity acc = 0;
      for (int q = 0; q < d; ++q) {
        sg ^= fpar[tau[q]] & acc;
        acc ^= par_of(pair, kb.tuple[q]);
      }
      if (sg) base = -base;
      std::vector<int> st(d);
      for (int k = 0; k < d; ++k) st[k] = ka.perm[tau[k]];
      std::vector<const AlgebraElement*> prods(d);
      bool dead = false;
      for (int k = 0; k < d && !dead; ++k) {
        prods[k] = &pair.basis_prod(ka.tuple[tau[k]], kb.tuple[k]);
        if (prods[k]->empty()) dead = true;
      }
      if (dead) continue;
      std::vector<size_t> pick(static_cast<size_t>(d), 0);
      while (true) {
        Rat c = base;
        std::vector<int> nt(d);
        for (int k = 0; k < d; ++k) {
          nt[k] = static_cast<int>(prods[k]->e[pick[k]].first);
          c *= prods[k]->e[pick[k]].second;
        }
        add_term(out, WreathKey{st, std::move(nt)}, c);
        int k = d - 1;
        for (; k >= 0; --k) {
          if (++pick[k] < prods[k]->nnz()) break;
          pick[k] = 0;
        }
        if (k < 0) break;
      }
    }
  }
  return out;
}

SparseMat rho(const GoodPair& pair, const WreathElement& x, int n) {
  const int d = x.d;
  VTensorBasis vb(pair, n, d);
  const long dim = vb.dim();
  SparseMat out(static_cast<int>(dim), static_cast<int>(dim));
  for (long j = 0; j < dim; ++j) {
    const auto u = vb.decode(j);
    std::vector<int> upar(d);
    for (int k = 0; k < d; ++k) upar[k] = par_of(pair, u[k].second);
    SparseVecBuilder col;
    for (const auto& [key, coeff] : x.terms) {
      // Koszul sign of the factorwise left multiplication: factor p of the
      // tuple passes the inputs before slot p.
      int ls = 0, acc = 0;
      for (int p = 0; p < d; ++p) {
        ls ^= par_of(pair, key.tuple[p]) & acc;
        acc ^= upar[p];
      }
      std::vector<const AlgebraElement*> prods(d);
      bool dead = false;
      for (int k = 0; k < d && !dead; ++k) {
        prods[k] = &pair.basis_prod(key.tuple[k], u[k].second);
        if (prods[k]->empty()) dead = true;
      }
      if (dead) continue;
      std::vector<size_t> pick(static_cast<size_t>(d), 0);
      while (true) {
        Rat c = coeff;
        std::vector<std::pair<int, int>> mid(d);
        std::vector<int> mpar(d);
        for (int k = 0; k < d; ++k) {
          const auto& [b2, pc] = prods[k]->e[pick[k]];
          mid[k] = {u[k].first, static_cast<int>(b2)};
          mpar[k] = par_of(pair, static_cast<int>(b2));
          c *= pc;
        }
        if ((ls ^ place_sign(key.perm, mpar)) != 0) c = -c;
        std::vector<std::pair<int, int>> nt(d);
        for (int k = 0; k < d; ++k) nt[key.perm[k]] = mid[k];
        col.add(vb.encode(nt), c);
        int k = d - 1;
        for (; k >= 0; --k) {
          if (++pick[k] < prods[k]->nnz()) break;
          pick[k] = 0;
        }
        if (k < 0) break;
      }
    }
    out.col[j] = col.build();
  }
  return out;
}

WebMorphism wreath_to_web(const GoodPair& pair, const WreathKey& k) {
  const int d = static_cast<int>(k.tuple.size());
  check_perm(k.perm);
  WebMorphism coup = wm_id(Obj{});
  for (int g = 0; g < d; ++g) {
    const BasisElement& be = pair.basis[k.tuple[g]];
    const int ci = pair.color_of(be.right);
    const int cj = pair.color_of(be.left);
    coup = tensor(coup,
                  wm_coupon(pair, SparseVec::unit(k.tuple[g]), ci, 1, cj));
  }
  return compose(perm_diagram(coup.cod, k.perm), coup);
}

Verdict wreath_from_web(const GoodPair& pair, int d, int jobs) {
  const auto words = all_words(pair.colors(), d);
  const auto perms = all_perms(d);
  auto obj_of = [](const std::vector<int>& w) {
    Obj o;
    for (int c : w) o.parts.emplace_back(c, 1);
    return o;
  };

  // Per-block dimension match: hom(i,j) against permutations with coupons.
  for (const auto& wi : words)
    for (const auto& wj : words) {
      const long web =
          static_cast<long>(enum_M(pair, obj_of(wi), obj_of(wj)).size());
      long wreath = 0;
      for (const auto& p : perms) {
        long prod = 1;
        for (int k = 0; k < d && prod > 0; ++k)
          prod *= static_cast<long>(
              basis_block(pair, wj[p[k]], wi[k]).size());
        wreath += prod;
      }
      if (web != wreath) {
        std::ostringstream os;
        os << "hom block dim mismatch: web " << web << ", wreath " << wreath
           << " at " << obj_of(wi).str(&pair) << " -> "
           << obj_of(wj).str(&pair);
        return Verdict{false, os.str()};
      }
    }

  // Structure constants on a deterministic sample of basis products.
  const auto keys = wreath_basis(pair, d);
  const long nk = static_cast<long>(keys.size());
  const long total = nk * nk;
  const long stride = std::max<long>(1, total / 240);
  std::vector<std::pair<long, long>> samples;
  for (long t = 0; t < total; t += stride)
    samples.emplace_back(t / nk, t % nk);

  Verdict verdict{true, ""};
  std::mutex mu;
  parallel_for(static_cast<long>(samples.size()), jobs, [&](long idx) {
    const WreathKey& a = keys[samples[idx].first];
    const WreathKey& b = keys[samples[idx].second];
    const WreathElement prod = wreath_mult(pair, wr_atom(a.perm, a.tuple),
                                           wr_atom(b.perm, b.tuple));
    const WebMorphism wa = wreath_to_web(pair, a);
    const WebMorphism wb = wreath_to_web(pair, b);
    std::string fail;
    if (wa.dom == wb.cod) {
      const BasisCoordinates lhs = reduce_to_basis(pair, compose(wa, wb));
      WebMorphism mapped = wm_zero(wb.dom, wa.cod);
      for (const auto& [k2, c2] : prod.terms)
        mapped = wm_add(mapped, wm_scale(c2, wreath_to_web(pair, k2)));
      const BasisCoordinates rhs = reduce_to_basis(pair, mapped);
      if (lhs.coeff != rhs.coeff) fail = "structure constants differ";
    } else if (!prod.is_zero()) {
      fail = "nonzero product across mismatched typing";
    }
    if (!fail.empty()) {
      std::lock_guard<std::mutex> lock(mu);
      if (verdict.equal) {
        std::ostringstream os;
        os << fail << " at sample " << samples[idx].first << " * "
           << samples[idx].second;
        verdict = Verdict{false, os.str()};
      }
    }
  });
  return verdict;
}

SparseMat right_e_action(const GoodPair& pair, int n, int d, int b, int r,
                         int s) {
  if (r < 1 || r > n || s < 1 || s > n)
    throw std::invalid_argument("right_e_action: row out of range");
  VTensorBasis vb(pair, n, d);
  const long dim = vb.dim();
  SparseMat out(static_cast<int>(dim), static_cast<int>(dim));
  const int bpar = par_of(pair, b);
  for (long j = 0; j < dim; ++j) {
    const auto u = vb.decode(j);
    std::vector<int> suf(static_cast<size_t>(d) + 1, 0);
    for (int k = d - 1; k >= 0; --k)
      suf[k] = suf[k + 1] ^ par_of(pair, u[k].second);
    SparseVecBuilder col;
    for (int k = 0; k < d; ++k) {
      if (u[k].first != r) continue;
      const AlgebraElement& p = pair.basis_prod(u[k].second, b);
      const int sgn = bpar & suf[k + 1];
      for (const auto& [b2, c] : p.e) {
        auto nu = u;
        nu[k] = {s, static_cast<int>(b2)};
        col.add(vb.encode(nu), sgn ? Rat(-c) : c);
      }
    }
    out.col[j] = col.build();
  }
  return out;
}

std::string SchurWeylReport::str() const {
  std::ostringstream os;
  os << "commutant dim " << commutant_dim << ", wreath image rank "
     << image_rank << ": " << (equal ? "equal" : "differ");
  if (!asserted) os << " (informational)";
  return os.str();
}

SchurWeylReport schur_weyl_check(const GoodPair& pair, int n, int d) {
  SchurWeylReport rep;
  rep.asserted = pair.semisimple;
  VTensorBasis vb(pair, n, d);
  const long dim = vb.dim();

  // The weight-and-color projections are themselves basis elements of the
  // Schur algebra, so any commutant element is block diagonal over tuples
  // sharing a (row, color) multiset. Seed matrix units per block.
  std::map<std::vector<std::pair<int, int>>, int> class_ids;
  std::vector<std::vector<long>> members;
  for (long j = 0; j < dim; ++j) {
    const auto u = vb.decode(j);
    std::vector<std::pair<int, int>> prof;
    prof.reserve(u.size());
    for (const auto& [row, b] : u)
      prof.emplace_back(row, pair.color_of(pair.basis[b].left));
    std::sort(prof.begin(), prof.end());
    auto [it, fresh] =
        class_ids.emplace(std::move(prof), static_cast<int>(members.size()));
    if (fresh) members.emplace_back();
    members[it->second].push_back(j);
  }
  std::vector<SparseVec> basis;
  for (const auto& mem : members)
    for (long col : mem)
      for (long row : mem) basis.push_back(SparseVec::unit(col * dim + row));

  auto unflatten = [&](const SparseVec& v) {
    SparseMat m(static_cast<int>(dim), static_cast<int>(dim));
    for (const auto& [idx, c] : v.e)
      m.col[idx / dim].e.emplace_back(idx % dim, c);
    return m;
  };

  // Cut the solution space by one eta-tilde generator at a time: images of
  // the current basis under [G, .] feed a tracked echelon, and dependent
  // images hand back kernel combinations.
  const auto comps = enum_compositions(n, d);
  for (const auto& x : comps) {
    for (const auto& y : comps) {
      if (basis.empty()) break;
      for (const auto& g : enum_M(pair, weight_obj(x), weight_obj(y))) {
        SparseMat gm =
            tau_tilde(pair, eta_tilde(pair, embed_grid(g, x, y), n, d));
        Echelon ech(true);
        std::vector<SparseVec> next;
        for (const auto& xv : basis) {
          SparseMat xm = unflatten(xv);
          SparseVec comm = mat_vec(mat_add(
              mat_mul(gm, xm), mat_scale(Rat(-1), mat_mul(xm, gm))));
          if (auto kern = ech.insert_or_kernel(comm)) {
            SparseVec nx;
            for (const auto& [src, c] : kern->e) nx.axpy(c, basis[src]);
            next.push_back(std::move(nx));
          }
        }
        basis = std::move(next);
        if (basis.empty()) break;
      }
    }
  }
  rep.commutant_dim = static_cast<long>(basis.size());

  Echelon image(false);
  for (const auto& key : wreath_basis(pair, d))
    image.insert(mat_vec(rho(pair, wr_atom(key.perm, key.tuple), n)));
  rep.image_rank = image.rank();
  rep.equal = rep.commutant_dim == rep.image_rank;
  return rep;
}

}  // namespace webcalc
