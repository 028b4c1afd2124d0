#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "webcalc/algebra.hpp"
#include "webcalc/diagram.hpp"
#include "webcalc/rational.hpp"
#include "webcalc/reduce.hpp"
#include "webcalc/sparse.hpp"

namespace webcalc {

// Basis element sigma (x) f_1 (x) ... (x) f_d of the wreath algebra. perm is
// the one-line form of sigma, 0-based: bottom position k ends at position
// perm[k]. tuple holds basis indices of A; the typing is implicit, with
// source color right(f_k) at position k and target color left(f_k) at
// position perm[k].
struct WreathKey {
  std::vector<int> perm;
  std::vector<int> tuple;
  auto operator<=>(const WreathKey&) const = default;
};

// Q-combination of wreath basis elements at a fixed d.
struct WreathElement {
  int d = 0;
  std::map<WreathKey, Rat> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const WreathElement& o) const {
    return d == o.d && terms == o.terms;
  }
};

WreathElement wr_zero(int d);
WreathElement wr_atom(std::vector<int> perm, std::vector<int> tuple,
                      const Rat& c = Rat(1));
WreathElement wr_add(const WreathElement& x, const WreathElement& y);
WreathElement wr_scale(const Rat& c, const WreathElement& x);

// Sum of tuple parities; crossings are even.
Parity wreath_parity(const GoodPair& pair, const WreathKey& k);

// All basis keys at length d, d! * dim(A)^d of them, in (perm, tuple) lex
// order.
std::vector<WreathKey> wreath_basis(const GoodPair& pair, int d);
long wreath_dim(const GoodPair& pair, int d);

// (sigma (x) f) (tau (x) g) = +- sigma tau (x) (f_{tau(1)} g_1) (x) ... with
// the sign of the place action of tau on the f-tuple: inverted pairs of odd
// factors, parities read at the permuted slots.
WreathElement wreath_mult(const GoodPair& pair, const WreathElement& x,
                          const WreathElement& y);

// Left action on V_n^{(x)d}: the tuple multiplies factorwise on the left
// (Koszul signs), then sigma carries factor k to position perm[k] with a
// sign over inverted odd pairs.
SparseMat rho(const GoodPair& pair, const WreathElement& x, int n);

// Basis diagram of the thin-strand web image: coupons f_k on strand k, then
// a crossing-only diagram carrying strand k to position perm[k].
WebMorphism wreath_to_web(const GoodPair& pair, const WreathKey& k);

// Compares End_Web over thin objects of length d with the wreath algebra:
// per-block dimension match against enum_M, then structure constants of a
// deterministic sample of basis products under wreath_to_web.
Verdict wreath_from_web(const GoodPair& pair, int d, int jobs = 1);

// Right multiplication by E^b_{r,s} (1-based) on V_n^{(x)d}, extended
// factorwise; factors to the right of the target pick up the parity sign.
SparseMat right_e_action(const GoodPair& pair, int n, int d, int b, int r,
                         int s);

struct SchurWeylReport {
  long commutant_dim = 0;
  long image_rank = 0;
  bool asserted = false;
  bool equal = false;
  std::string str() const;
};

// Commutant of the eta-tilde span acting on V_n^{(x)d} versus the rank of
// rho on the wreath basis. Equality is asserted expectation for semisimple
// pairs and informational otherwise.
SchurWeylReport schur_weyl_check(const GoodPair& pair, int n, int d);

}  // namespace webcalc
