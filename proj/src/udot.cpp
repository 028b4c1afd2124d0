#include "webcalc/udot.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "webcalc/eval.hpp"
#include "webcalc/threads.hpp"

namespace webcalc {

bool Weight::valid() const {
  for (int x : lam)
    if (x < 0) return false;
  return true;
}

int Weight::total() const {
  int t = 0;
  for (int x : lam) t += x;
  return t;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i) os << ',';
    os << lam[i];
  }
  os << ')';
  return os.str();
}

std::optional<Weight> udot_codomain(const UdotWord& w) {
  Weight cur = w.dom;
  if (!cur.valid()) return std::nullopt;
  for (const auto& g : w.gens) {
    if (g.r < 1 || g.r > cur.n() || g.s < 1 || g.s > cur.n())
      throw std::invalid_argument("udot: generator index out of range");
    cur.lam[g.r - 1] += 1;
    cur.lam[g.s - 1] -= 1;
    if (!cur.valid()) return std::nullopt;
  }
  return cur;
}

WebMorphism udot_to_web(const GoodPair& pair, const UdotWord& w) {
  if (!w.dom.valid()) throw std::invalid_argument("udot: negative weight");
  Weight cur = w.dom;
  WebMorphism acc = wm_id(weight_obj(cur.lam));
  for (const auto& g : w.gens) {
    if (g.r < 1 || g.r > cur.n() || g.s < 1 || g.s > cur.n())
      throw std::invalid_argument("udot: generator index out of range");
    acc = compose(e_generator(pair, cur.lam, g.r, g.s, g.f, 1), acc);
    cur.lam[g.r - 1] += 1;
    cur.lam[g.s - 1] -= 1;
    if (!cur.valid())
      return wm_zero(weight_obj(w.dom.lam), weight_obj(w.dom.lam));
  }
  return acc;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("udot word, position " + std::to_string(i) +
                                ": " + msg);
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
};

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool digit(char c) { return c >= '0' && c <= '9'; }

std::string read_ident(Cursor& c) {
  c.skip();
  size_t start = c.i;
  while (c.i < c.s.size() && ident_char(c.s[c.i])) ++c.i;
  if (c.i == start) c.fail("expected a name");
  return c.s.substr(start, c.i - start);
}

long read_long(Cursor& c) {
  c.skip();
  size_t start = c.i;
  long v = 0;
  while (c.i < c.s.size() && digit(c.s[c.i])) {
    v = v * 10 + (c.s[c.i] - '0');
    if (v > 1000000) c.fail("number too large");
    ++c.i;
  }
  if (c.i == start) c.fail("expected a number");
  return v;
}

Rat read_rat(Cursor& c) {
  long num = read_long(c);
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    long den = read_long(c);
    return rat(num, den);
  }
  return Rat(num);
}

// Signed sum of optionally scaled basis ids. A leading number only counts
// as a scalar when '*' follows, so digit-only ids stay reachable.
AlgebraElement read_elem(const GoodPair& pair, Cursor& c) {
  AlgebraElement out;
  bool first = true;
  while (true) {
    c.skip();
    int sign = 1;
    if (c.eat('+')) {
    } else if (c.eat('-')) {
      sign = -1;
    } else if (!first) {
      break;
    }
    c.skip();
    Rat coeff(sign);
    if (c.i < c.s.size() && digit(c.s[c.i])) {
      size_t save = c.i;
      Rat r = read_rat(c);
      c.skip();
      if (c.i < c.s.size() && c.s[c.i] == '*') {
        ++c.i;
        coeff = sign < 0 ? Rat(-r) : r;
      } else {
        c.i = save;
      }
    }
    std::string id = read_ident(c);
    int b = pair.index_of(id);
    if (b < 0) c.fail("unknown basis element '" + id + "'");
    out.axpy(coeff, SparseVec::unit(b));
    first = false;
    c.skip();
    if (c.i >= c.s.size() || (c.s[c.i] != '+' && c.s[c.i] != '-')) break;
  }
  return out;
}

// "o" or the round composition sign between generator factors.
bool eat_compose(Cursor& c) {
  c.skip();
  if (c.i < c.s.size() && c.s[c.i] == 'o' &&
      (c.i + 1 >= c.s.size() || !ident_char(c.s[c.i + 1]))) {
    ++c.i;
    return true;
  }
  static const std::string circ = "\xe2\x88\x98";
  if (c.s.compare(c.i, circ.size(), circ) == 0) {
    c.i += circ.size();
    return true;
  }
  return false;
}

}  // namespace

UdotWord parse_udot_word(const GoodPair& pair, const std::string& text) {
  Cursor c{text};
  std::vector<UdotGen> display;
  while (true) {
    std::string e = read_ident(c);
    if (e != "E") c.fail("expected generator 'E'");
    c.expect('(');
    AlgebraElement f = read_elem(pair, c);
    c.expect(';');
    int r = static_cast<int>(read_long(c));
    c.expect(',');
    int s = static_cast<int>(read_long(c));
    c.expect(')');
    display.push_back(UdotGen{std::move(f), r, s});
    if (c.eat('@')) break;
    if (!eat_compose(c)) c.fail("expected a composition sign or '@'");
  }
  std::string kw = read_ident(c);
  if (kw != "lambda") c.fail("expected 'lambda'");
  c.expect('=');
  c.expect('(');
  std::vector<int> lam;
  if (!c.eat(')')) {
    while (true) {
      lam.push_back(static_cast<int>(read_long(c)));
      if (c.eat(')')) break;
      c.expect(',');
    }
  }
  c.skip();
  if (c.i != text.size()) c.fail("trailing input");
  UdotWord w;
  w.dom = Weight{std::move(lam)};
  w.gens.assign(display.rbegin(), display.rend());
  for (const auto& g : w.gens)
    if (g.r < 1 || g.r > w.dom.n() || g.s < 1 || g.s > w.dom.n())
      throw std::invalid_argument("udot: generator index out of range");
  return w;
}

namespace {

constexpr const char* kRelNames[] = {"scalar", "sum", "diagonal-unit",
                                     "commutator", "odd-square"};

// E^f_{r,s} 1_lam; empty content is the zero morphism.
WebMorphism gen_elem(const GoodPair& pair, const std::vector<int>& lam, int r,
                     int s, const AlgebraElement& f) {
  if (f.empty()) {
    Obj o = weight_obj(lam);
    return wm_zero(o, o);
  }
  return e_generator(pair, lam, r, s, f, 1);
}

// E^{f1}_{r1,s1} E^{f2}_{r2,s2} 1_lam, right factor first.
WebMorphism two_step(const GoodPair& pair, const std::vector<int>& lam, int r1,
                     int s1, const AlgebraElement& f1, int r2, int s2,
                     const AlgebraElement& f2) {
  WebMorphism first = gen_elem(pair, lam, r2, s2, f2);
  std::vector<int> mu = lam;
  mu[r2 - 1] += 1;
  mu[s2 - 1] -= 1;
  for (int x : mu)
    if (x < 0) {
      Obj o = weight_obj(lam);
      return wm_zero(o, o);
    }
  return compose(gen_elem(pair, mu, r1, s1, f1), first);
}

std::vector<std::vector<int>> all_weights(int n, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<size_t>(n), 0);
  while (true) {
    out.push_back(w);
    int k = n - 1;
    for (; k >= 0; --k) {
      if (++w[k] <= bound) break;
      w[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

struct UdotInstance {
  int rel = 0;
  std::string params;
  WebMorphism lhs, rhs;
  int rank = 1;
};

}  // namespace

SuiteReport verify_udot(const GoodPair& pair, int n, int weight_bound,
                        int eval_rank, int jobs) {
  if (n < 1 || weight_bound < 0)
    throw std::invalid_argument("verify_udot: bad bounds");
  SuiteReport rep;
  rep.pair_name = pair.name;
  rep.bound = weight_bound;
  rep.n = eval_rank;
  rep.set = "udot";

  const Rat alpha = rat(-1, 3);
  const int dimA = pair.dim();
  std::vector<UdotInstance> inst;

  for (const auto& lam : all_weights(n, weight_bound)) {
    const Obj dom = weight_obj(lam);
    int total = 0;
    for (int x : lam) total += x;
    const int rank = eval_rank > 0 ? eval_rank : std::max(total, 1);
    const std::string ls = " lambda=" + Weight{lam}.str();

    for (int r = 1; r <= n; ++r)
      inst.push_back({2, "r=" + std::to_string(r) + ls,
                      gen_elem(pair, lam, r, r, pair.unit()),
                      wm_scale(Rat(lam[r - 1]), wm_id(dom)), rank});

    for (int f = 0; f < dimA; ++f) {
      const AlgebraElement fe = SparseVec::unit(f);
      const bool odd = (pair.basis[f].parity & 1) != 0;
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          const std::string rs =
              " r=" + std::to_string(r) + " s=" + std::to_string(s) + ls;
          AlgebraElement af = fe;
          af.scale(alpha);
          inst.push_back({0, "f=" + pair.basis[f].id + rs,
                          gen_elem(pair, lam, r, s, af),
                          wm_scale(alpha, gen_elem(pair, lam, r, s, fe)),
                          rank});
          if (odd) {
            WebMorphism rhs =
                r == s ? gen_elem(pair, lam, r, r, pair.basis_prod(f, f))
                       : wm_zero(dom, dom);
            inst.push_back({4, "f=" + pair.basis[f].id + rs,
                            two_step(pair, lam, r, s, fe, r, s, fe),
                            std::move(rhs), rank});
          }
        }
      for (int g = f; g < dimA; ++g) {
        AlgebraElement sum = SparseVec::unit(f);
        sum.axpy(Rat(1), SparseVec::unit(g));
        for (int r = 1; r <= n; ++r)
          for (int s = 1; s <= n; ++s)
            inst.push_back(
                {1,
                 "f=" + pair.basis[f].id + " g=" + pair.basis[g].id + " r=" +
                     std::to_string(r) + " s=" + std::to_string(s) + ls,
                 gen_elem(pair, lam, r, s, sum),
                 wm_add(gen_elem(pair, lam, r, s, SparseVec::unit(f)),
                        gen_elem(pair, lam, r, s, SparseVec::unit(g))),
                 rank});
      }
    }

    for (int f = 0; f < dimA; ++f)
      for (int g = 0; g < dimA; ++g) {
        const int sgn = pair.basis[f].parity & pair.basis[g].parity & 1;
        const Rat swap = sgn ? Rat(1) : Rat(-1);
        const AlgebraElement fe = SparseVec::unit(f);
        const AlgebraElement ge = SparseVec::unit(g);
        for (int p = 1; p <= n; ++p)
          for (int q = 1; q <= n; ++q)
            for (int r = 1; r <= n; ++r)
              for (int s = 1; s <= n; ++s) {
                WebMorphism lhs = wm_add(
                    two_step(pair, lam, p, q, fe, r, s, ge),
                    wm_scale(swap, two_step(pair, lam, r, s, ge, p, q, fe)));
                WebMorphism rhs = wm_zero(dom, dom);
                if (q == r)
                  rhs = wm_add(
                      rhs, gen_elem(pair, lam, p, s, pair.basis_prod(f, g)));
                if (p == s)
                  rhs = wm_add(
                      rhs,
                      wm_scale(swap, gen_elem(pair, lam, r, q,
                                              pair.basis_prod(g, f))));
                std::ostringstream ps;
                ps << "f=" << pair.basis[f].id << " g=" << pair.basis[g].id
                   << " p=" << p << " q=" << q << " r=" << r << " s=" << s
                   << ls;
                inst.push_back(
                    {3, ps.str(), std::move(lhs), std::move(rhs), rank});
              }
      }
  }

  std::map<int, std::unique_ptr<Evaluator>> evs;
  for (const auto& it : inst)
    if (!evs.count(it.rank))
      evs.emplace(it.rank, std::make_unique<Evaluator>(pair, it.rank));

  rep.lines.resize(5);
  std::vector<std::vector<long>> by_rel(5);
  for (size_t i = 0; i < inst.size(); ++i)
    by_rel[inst[i].rel].push_back(static_cast<long>(i));

  const auto sweep0 = std::chrono::steady_clock::now();
  for (int k = 0; k < 5; ++k) {
    SuiteLine& line = rep.lines[k];
    line.relation = kRelNames[k];
    const auto t0 = std::chrono::steady_clock::now();
    std::mutex mu;
    parallel_for(static_cast<long>(by_rel[k].size()), jobs, [&](long i) {
      const UdotInstance& it = inst[by_rel[k][i]];
      const RelationInstance ri{kRelNames[k], it.params, it.lhs, it.rhs};
      const Verdict v = verify_instance(*evs.at(it.rank), ri);
      std::lock_guard<std::mutex> lock(mu);
      line.instances++;
      if (v.equal) {
        line.equal++;
      } else {
        line.unequal++;
        if (line.witness.empty()) line.witness = it.params + " | " + v.witness;
      }
    });
    line.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rep.total += line.instances;
    rep.failed += line.unequal;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              sweep0)
                    .count();
  return rep;
}

}  // namespace webcalc
