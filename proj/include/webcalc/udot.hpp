#pragma once

#include <optional>
#include <string>
#include <vector>

#include "webcalc/algebra.hpp"
#include "webcalc/diagram.hpp"
#include "webcalc/reduce.hpp"

namespace webcalc {

// gl_n weight: n nonnegative entries.
struct Weight {
  std::vector<int> lam;
  int n() const { return static_cast<int>(lam.size()); }
  bool valid() const;
  int total() const;
  bool operator==(const Weight&) const = default;
  std::string str() const;
};

// Generator symbol E^f_{r,s} (1-based), shifting the weight by +e_r - e_s.
struct UdotGen {
  AlgebraElement f;
  int r = 1, s = 1;
};

// Chain of generators out of dom; gens[0] is applied first.
struct UdotWord {
  Weight dom;
  std::vector<UdotGen> gens;
};

// Codomain after all steps, or nullopt when an intermediate weight leaves
// the nonnegative cone. Such words evaluate to zero.
std::optional<Weight> udot_codomain(const UdotWord& w);

// Image in the unit-colored web category: each generator becomes the
// one-strand transport diagram at its step weight (a split-coupon-merge
// bubble on the diagonal). Words through invalid weights map to zero.
// Throws std::invalid_argument for generator indices outside [1,n].
WebMorphism udot_to_web(const GoodPair& pair, const UdotWord& w);

// Parses "E(f;r,s) o E(g;p,q) @ lambda=(2,0)"; "o" may also be spelled as
// the round composition sign. The leftmost factor is applied last. f is a
// signed sum of optionally scaled basis ids ("c", "1+c", "-1/3*a12").
// Throws std::invalid_argument with a character position on bad input.
UdotWord parse_udot_word(const GoodPair& pair, const std::string& text);

// Sweeps the five defining relations over all weights with entries in
// [0, weight_bound], all generator indices in [1,n], and all basis
// contents, comparing both sides under evaluation. eval_rank 0 evaluates
// each weight at its own total (the smallest faithful rank); a positive
// value pins one rank for the whole sweep.
SuiteReport verify_udot(const GoodPair& pair, int n, int weight_bound,
                        int eval_rank = 0, int jobs = 1);

}  // namespace webcalc
