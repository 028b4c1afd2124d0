#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "webcalc/combinatorics.hpp"

namespace webcalc {

struct ObjectMismatch : std::runtime_error {
  explicit ObjectMismatch(const std::string& m) : std::runtime_error(m) {}
};

// Generator box. Thickness 0 anywhere turns the box into an identity (deleted
// strand convention); builders map negative thicknesses to the zero morphism
// before a Box is ever stored.
struct Box {
  enum class Kind { Split, Merge, Cross, Coupon };
  Kind kind;
  int color = 0;   // split/merge color; cross left color; coupon source color
  int color2 = 0;  // cross right color; coupon target color
  int x = 0;       // split/merge left part; cross left thickness; coupon z
  int y = 0;       // split/merge right part; cross right thickness
  AlgebraElement elem;  // coupon content

  Obj dom() const;
  Obj cod() const;
  bool is_identity() const;
  Parity parity(const GoodPair& p) const;
  bool operator==(const Box& o) const {
    return kind == o.kind && color == o.color && color2 == o.color2 &&
           x == o.x && y == o.y && elem == o.elem;
  }
  std::string str(const GoodPair* p = nullptr) const;
};

// One whiskered layer: id_left (x) box (x) id_right.
struct Layer {
  Obj left, right;
  Box box;
  Obj dom() const { return obj_concat(obj_concat(left, box.dom()), right); }
  Obj cod() const { return obj_concat(obj_concat(left, box.cod()), right); }
  bool operator==(const Layer& o) const {
    return left == o.left && right == o.right && box == o.box;
  }
};

// Single diagram in whiskered normal form, read bottom to top. All stored
// objects are reduced. No layers = identity on dom.
struct Diagram {
  Obj dom, cod;
  std::vector<Layer> layers;
  bool operator==(const Diagram& o) const {
    return dom == o.dom && cod == o.cod && layers == o.layers;
  }
};

// Formal Q-combination of diagrams with common endpoints. Empty terms = the
// zero morphism.
struct WebMorphism {
  Obj dom, cod;
  std::vector<std::pair<Rat, Diagram>> terms;
  bool is_zero() const { return terms.empty(); }
};

// Throws when a layer boundary fails to chain; used by property tests.
void diagram_check(const Diagram& d);

WebMorphism wm_zero(const Obj& dom, const Obj& cod);
WebMorphism wm_id(const Obj& o);
WebMorphism wm_scale(const Rat& c, const WebMorphism& m);
WebMorphism wm_add(const WebMorphism& a, const WebMorphism& b);
WebMorphism compose(const WebMorphism& top, const WebMorphism& bottom);
WebMorphism tensor(const WebMorphism& a, const WebMorphism& b);
WebMorphism whisker(const Obj& left, const WebMorphism& m, const Obj& right);

// Generator constructors; negative thickness yields the zero morphism,
// zero thickness an identity.
WebMorphism wm_split(int color, int x, int y);
WebMorphism wm_merge(int color, int x, int y);
WebMorphism wm_cross(int ci, int x, int cj, int y);
// coupon f: i^(z) -> j^(z); f homogeneous, supported on the (j,i) block
// (unchecked for unit color), in the sub-span when z >= 2.
WebMorphism wm_coupon(const GoodPair& pair, const AlgebraElement& f, int ci,
                      int z, int cj);

// Iterated splits/merges between i^(sum parts) and the row of parts.
WebMorphism multi_split(int color, const std::vector<int>& parts);
WebMorphism multi_merge(int color, const std::vector<int>& parts);

enum class Routing { BubbleLeftmost, Insertion };

// Crossing-only diagram carrying bottom strand k to top position perm[k].
WebMorphism perm_diagram(const Obj& strands, const std::vector<int>& perm,
                         Routing routing = Routing::BubbleLeftmost);

// Conjugation by the all-ones multi-splits/merges. Contraction needs the
// thick endpoints spelled out (the all-ones boundary does not determine the
// grouping).
WebMorphism explode(const WebMorphism& m);
WebMorphism contract(const WebMorphism& m, const Obj& dom, const Obj& cod);

enum class EtaFlavor { A, Diamond };

// Basis diagram eta^a (or eta^diamond) for mu in M(src,dst).
WebMorphism eta(const GoodPair& pair, const Obj& src, const Obj& dst,
                const MatrixComposition& mu, EtaFlavor flavor);

// Weight object 1^(lambda_1) ... 1^(lambda_n) over the unit color.
Obj weight_obj(const std::vector<int>& lambda);

// The three-case generator e^{(f,t)}_{[r,s],lambda} on unit-colored strands;
// r,s are 1-based. Zero morphism when a thickness would go negative.
WebMorphism e_generator(const GoodPair& pair, const std::vector<int>& lambda,
                        int r, int s, const AlgebraElement& f, int t);

}  // namespace webcalc
