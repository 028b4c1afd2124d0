#include "webcalc/eval.hpp"

#include <algorithm>
#include <sstream>

namespace webcalc {

Parity SymMonomial::parity(const GoodPair& pair) const {
  int p = 0;
  for (auto& [k, b] : factors) p += pair.basis[b].parity;
  return p & 1;
}

std::string SymMonomial::str(const GoodPair& pair) const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << ".";
    os << "v" << factors[i].first << "^" << pair.basis[factors[i].second].id;
  }
  return os.str();
}

bool straighten(const GoodPair& pair, std::vector<std::pair<int, int>>& factors,
                int& sign) {
  sign = 1;
  // Insertion sort; moving an odd variable past another odd one flips the
  // sign, a repeated odd variable kills the term.
  for (size_t i = 1; i < factors.size(); ++i) {
    auto f = factors[i];
    Parity pf = pair.basis[f.second].parity;
    size_t j = i;
    while (j > 0 && factors[j - 1] > f) {
      if (pf && pair.basis[factors[j - 1].second].parity) sign = -sign;
      factors[j] = factors[j - 1];
      --j;
    }
    factors[j] = f;
  }
  for (size_t i = 1; i < factors.size(); ++i)
    if (factors[i] == factors[i - 1] && pair.basis[factors[i].second].parity)
      return false;
  return true;
}

long SymBasis::index_of(const SymMonomial& m) const {
  auto it = std::lower_bound(monos.begin(), monos.end(), m);
  if (it == monos.end() || !(*it == m)) return -1;
  return it - monos.begin();
}

std::string ModuleBasis::mono_str(const GoodPair& pair, long index) const {
  std::vector<std::string> pieces(parts.size());
  for (size_t i = parts.size(); i-- > 0;) {
    long d = parts[i]->dim();
    pieces[i] = parts[i]->monos[index % d].str(pair);
    index /= d;
  }
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i) out += " (x) ";
    out += pieces[i];
  }
  return out.empty() ? "1" : out;
}

Evaluator::Evaluator(const GoodPair& pair, int n) : pair_(pair), n_(n) {}

const SymBasis& Evaluator::sym_basis(int color, int x) {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(color, x);
  auto it = sym_.find(key);
  if (it != sym_.end()) return *it->second;

  auto sb = std::make_unique<SymBasis>();
  sb->color = color;
  sb->x = x;
  sb->n = n_;

  // Variables (k, b) for b in the color's block of B, in (k, b) order.
  std::vector<std::pair<int, int>> vars;
  for (int k = 1; k <= n_; ++k)
    for (int b = 0; b < pair_.dim(); ++b) {
      if (color != UNIT_COLOR &&
          pair_.color_of(pair_.basis[b].left) != color)
        continue;
      vars.emplace_back(k, b);
    }

  SymMonomial cur;
  auto rec = [&](auto&& self, size_t from, int remaining) -> void {
    if (remaining == 0) {
      sb->monos.push_back(cur);
      return;
    }
    for (size_t v = from; v < vars.size(); ++v) {
      bool odd = pair_.basis[vars[v].second].parity != 0;
      cur.factors.push_back(vars[v]);
      self(self, v + (odd ? 1 : 0), remaining - 1);
      cur.factors.pop_back();
    }
  };
  rec(rec, 0, x);
  std::sort(sb->monos.begin(), sb->monos.end());
  for (const SymMonomial& m : sb->monos)
    sb->par.push_back(static_cast<char>(m.parity(pair_)));

  const SymBasis& ref = *sb;
  sym_[key] = std::move(sb);
  return ref;
}

const ModuleBasis& Evaluator::module_basis(const Obj& o) {
  Obj r = o.reduced();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mod_.find(r);
    if (it != mod_.end()) return *it->second;
  }
  auto mb = std::make_unique<ModuleBasis>();
  mb->object = r;
  for (auto [c, x] : r.parts) mb->parts.push_back(&sym_basis(c, x));
  for (const SymBasis* p : mb->parts) mb->dimension *= p->dim();
  // Eager parity table, counted through the mixed radix.
  mb->par.assign(mb->dimension, 0);
  if (!mb->parts.empty()) {
    std::vector<long> digit(mb->parts.size(), 0);
    for (long idx = 0; idx < mb->dimension; ++idx) {
      char p = 0;
      for (size_t i = 0; i < mb->parts.size(); ++i)
        p ^= mb->parts[i]->par[digit[i]];
      mb->par[idx] = p;
      for (size_t i = mb->parts.size(); i-- > 0;) {
        if (++digit[i] < mb->parts[i]->dim()) break;
        digit[i] = 0;
      }
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = mod_.try_emplace(r, std::move(mb));
  return *it->second;
}

namespace {

std::string box_key(const Box& b) {
  std::ostringstream os;
  os << static_cast<int>(b.kind) << "|" << b.color << "|" << b.color2 << "|"
     << b.x << "|" << b.y;
  for (auto& [i, c] : b.elem.e) os << "|" << i << ":" << rat_str(c);
  return os.str();
}

}  // namespace

const SparseMat& Evaluator::box_matrix(const Box& b) {
  std::string key = box_key(b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = box_.find(key);
    if (it != box_.end()) return *it->second;
  }
  auto mat = std::make_unique<SparseMat>(build_box(b));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = box_.try_emplace(key, std::move(mat));
  return *it->second;
}

SparseMat Evaluator::build_box(const Box& b) {
  const ModuleBasis& dom = module_basis(b.dom());
  const ModuleBasis& cod = module_basis(b.cod());
  SparseMat m;
  m.rows = static_cast<int>(cod.dim());
  m.col.resize(dom.dim());

  switch (b.kind) {
    case Box::Kind::Split: {
      const SymBasis& sd = *dom.parts[0];
      const SymBasis& sl = sym_basis(b.color, b.x);
      const SymBasis& sr = sym_basis(b.color, b.y);
      int total = b.x + b.y;
      for (long j = 0; j < sd.dim(); ++j) {
        const auto& fs = sd.monos[j].factors;
        SparseVecBuilder col;
        // All position subsets T of size x; U the complement.
        std::vector<int> pick(b.x);
        auto rec = [&](auto&& self, int from, int chosen) -> void {
          if (chosen == b.x) {
            SymMonomial mt, mu;
            int eps = 0;
            std::vector<char> in_t(total, 0);
            for (int p : pick) in_t[p] = 1;
            for (int p = 0; p < total; ++p)
              (in_t[p] ? mt : mu).factors.push_back(fs[p]);
            for (int t = 0; t < total; ++t)
              for (int u = 0; u < t; ++u)
                if (in_t[t] && !in_t[u] &&
                    pair_.basis[fs[t].second].parity &&
                    pair_.basis[fs[u].second].parity)
                  ++eps;
            long it = sl.index_of(mt), iu = sr.index_of(mu);
            col.add(it * sr.dim() + iu, Rat((eps & 1) ? -1 : 1));
            return;
          }
          for (int p = from; p <= total - (b.x - chosen); ++p) {
            pick[chosen] = p;
            self(self, p + 1, chosen + 1);
          }
        };
        rec(rec, 0, 0);
        m.col[j] = col.build();
      }
      break;
    }
    case Box::Kind::Merge: {
      const SymBasis& sl = *dom.parts[0];
      const SymBasis& sr = *dom.parts[1];
      const SymBasis& sc = *cod.parts[0];
      for (long a = 0; a < sl.dim(); ++a)
        for (long c = 0; c < sr.dim(); ++c) {
          std::vector<std::pair<int, int>> fs = sl.monos[a].factors;
          fs.insert(fs.end(), sr.monos[c].factors.begin(),
                    sr.monos[c].factors.end());
          int sign = 1;
          if (!straighten(pair_, fs, sign)) continue;
          SymMonomial out{fs};
          m.col[a * sr.dim() + c] =
              SparseVec::unit(sc.index_of(out), Rat(sign));
        }
      break;
    }
    case Box::Kind::Cross: {
      const SymBasis& sl = *dom.parts[0];
      const SymBasis& sr = *dom.parts[1];
      for (long a = 0; a < sl.dim(); ++a)
        for (long c = 0; c < sr.dim(); ++c) {
          int sg = (sl.par[a] && sr.par[c]) ? -1 : 1;
          m.col[a * sr.dim() + c] =
              SparseVec::unit(c * sl.dim() + a, Rat(sg));
        }
      break;
    }
    case Box::Kind::Coupon: {
      const SymBasis& sd = *dom.parts[0];
      const SymBasis& sc = *cod.parts[0];
      // Left-multiply every variable by the content and expand.
      for (long j = 0; j < sd.dim(); ++j) {
        const auto& fs = sd.monos[j].factors;
        SparseVecBuilder col;
        std::vector<std::pair<int, int>> term(fs.size());
        auto rec = [&](auto&& self, size_t pos, const Rat& coeff) -> void {
          if (pos == fs.size()) {
            std::vector<std::pair<int, int>> t = term;
            int sign = 1;
            if (!straighten(pair_, t, sign)) return;
            long idx = sc.index_of(SymMonomial{t});
            col.add(idx, coeff * sign);
            return;
          }
          for (const auto& [fb, fc] : b.elem.e) {
            const AlgebraElement& prod =
                pair_.basis_prod(fb, fs[pos].second);
            for (const auto& [hb, hc] : prod.e) {
              term[pos] = {fs[pos].first, hb};
              self(self, pos + 1, coeff * fc * hc);
            }
          }
        };
        rec(rec, 0, Rat(1));
        m.col[j] = col.build();
      }
      break;
    }
  }
  return m;
}

CompiledMorphism Evaluator::compile(const WebMorphism& m) {
  CompiledMorphism cm;
  cm.dom = m.dom.reduced();
  cm.cod = m.cod.reduced();
  cm.dom_dim = module_basis(m.dom).dim();
  cm.cod_dim = module_basis(m.cod).dim();
  for (const auto& [c, d] : m.terms) {
    CompiledMorphism::Term term;
    term.coeff = c;
    for (const Layer& l : d.layers) {
      const ModuleBasis& bdom = module_basis(l.box.dom());
      const ModuleBasis& bcod = module_basis(l.box.cod());
      LayerPlan lp;
      lp.box = &box_matrix(l.box);
      lp.dmi = bdom.dim();
      lp.dmo = bcod.dim();
      lp.dr = module_basis(l.right).dim();
      lp.left_par = &module_basis(l.left).par;
      lp.in_par = &bdom.par;
      lp.out_par = &bcod.par;
      term.layers.push_back(lp);
    }
    cm.terms.push_back(std::move(term));
  }
  return cm;
}

SparseVec Evaluator::apply(const CompiledMorphism& cm,
                           const SparseVec& x) const {
  SparseVec acc;
  for (const auto& term : cm.terms) {
    SparseVec v = x;
    for (const LayerPlan& lp : term.layers) {
      if (v.empty()) break;
      SparseVecBuilder out;
      long stride = lp.dr * lp.dmi;
      for (const auto& [idx, c] : v.e) {
        long ir = idx % lp.dr;
        long im = (idx / lp.dr) % lp.dmi;
        long il = idx / stride;
        // Koszul: the box slides past the left factor; the per-entry parity
        // of the box matrix is parity(in) + parity(out).
        bool pl = (*lp.left_par)[il] != 0;
        char pin = (*lp.in_par)[im];
        for (const auto& [om, bc] : lp.box->col[im].e) {
          Rat prod(c * bc);
          if (pl && ((pin ^ (*lp.out_par)[om]) & 1)) prod = -prod;
          out.add((il * lp.dmo + om) * lp.dr + ir, prod);
        }
      }
      v = out.build();
    }
    acc.axpy(term.coeff, v);
  }
  return acc;
}

SparseVec Evaluator::apply(const WebMorphism& m, const SparseVec& x) {
  return apply(compile(m), x);
}

SparseMat Evaluator::eval(const WebMorphism& m) {
  CompiledMorphism cm = compile(m);
  SparseMat out;
  out.rows = static_cast<int>(cm.cod_dim);
  out.col.resize(cm.dom_dim);
  for (long j = 0; j < cm.dom_dim; ++j)
    out.col[j] = apply(cm, SparseVec::unit(j, Rat(1)));
  return out;
}

std::string Evaluator::first_difference(const WebMorphism& a,
                                        const WebMorphism& b) {
  if (!(a.dom.reduced() == b.dom.reduced()) ||
      !(a.cod.reduced() == b.cod.reduced()))
    return "endpoint mismatch: " + a.dom.str() + "->" + a.cod.str() + " vs " +
           b.dom.str() + "->" + b.cod.str();
  CompiledMorphism ca = compile(a);
  CompiledMorphism cb = compile(b);
  const ModuleBasis& dom = module_basis(a.dom);
  const ModuleBasis& cod = module_basis(a.cod);
  for (long j = 0; j < dom.dim(); ++j) {
    SparseVec va = apply(ca, SparseVec::unit(j, Rat(1)));
    SparseVec vb = apply(cb, SparseVec::unit(j, Rat(1)));
    if (va == vb) continue;
    va.axpy(Rat(-1), vb);
    long row = va.e.front().first;
    std::ostringstream os;
    os << "column " << dom.mono_str(pair_, j) << ": row "
       << cod.mono_str(pair_, row) << " differs by " << rat_str(va.e.front().second);
    return os.str();
  }
  return "";
}

std::string Evaluator::export_matrix(const WebMorphism& m) {
  CompiledMorphism cm = compile(m);
  const ModuleBasis& dom = module_basis(m.dom);
  const ModuleBasis& cod = module_basis(m.cod);
  std::ostringstream os;
  os << "# dom " << m.dom.str(&pair_) << " dim " << dom.dim() << "\n";
  for (long j = 0; j < dom.dim(); ++j)
    os << "# col " << j << " = " << dom.mono_str(pair_, j) << "\n";
  os << "# cod " << m.cod.str(&pair_) << " dim " << cod.dim() << "\n";
  for (long i = 0; i < cod.dim(); ++i)
    os << "# row " << i << " = " << cod.mono_str(pair_, i) << "\n";
  for (long j = 0; j < dom.dim(); ++j) {
    SparseVec v = apply(cm, SparseVec::unit(j, Rat(1)));
    for (const auto& [i, c] : v.e)
      os << i << " " << j << " " << rat_str(c) << "\n";
  }
  return os.str();
}

}  // namespace webcalc
