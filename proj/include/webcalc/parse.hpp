#pragma once

#include <stdexcept>
#include <string>

#include "webcalc/diagram.hpp"

namespace webcalc {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Element expression: rational combinations of basis ids, e.g.
// "c", "2*c1 - 1/3*c2". A numeric token that names a basis element is the
// basis element; scalars need an explicit basis id after them.
AlgebraElement parse_elem(const GoodPair& pair, const std::string& text);

// Object word like "1^(2) e2^(1)"; colors are idempotent basis ids.
Obj parse_obj(const GoodPair& pair, const std::string& text);

// Morphism file: either a single diagram
//   dom: <object>
//   layers:
//   [box, box, ...]
// or a combination
//   terms:
//   coeff: <rational>
//   dom: ...
//   layers:
//   ...
// Boxes: id(<object>), split(i;x,y), merge(i;x,y), cross(i^(x),j^(y)),
// coupon(<elem-expr>; i,x -> j). Multi-box layers tensor left to right.
// Lines starting with # are comments. Malformed input raises ParseError with
// position; stacking mismatches raise ParseError naming the layer.
WebMorphism parse_morphism(const GoodPair& pair, const std::string& text);

}  // namespace webcalc
