#include "webcalc/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace webcalc {

namespace {

Obj make_obj(std::vector<std::pair<int, int>> parts) {
  Obj o;
  o.parts = std::move(parts);
  return o.reduced();
}

std::string color_str(int c, const GoodPair* p) {
  if (c == UNIT_COLOR) return "1";
  if (p && c >= 0 && c < p->colors()) return p->basis[p->idems[c]].id;
  return "#" + std::to_string(c);
}

}  // namespace

Obj Box::dom() const {
  switch (kind) {
    case Kind::Split:
      return make_obj({{color, x + y}});
    case Kind::Merge:
      return make_obj({{color, x}, {color, y}});
    case Kind::Cross:
      return make_obj({{color, x}, {color2, y}});
    case Kind::Coupon:
      return make_obj({{color, x}});
  }
  return {};
}

Obj Box::cod() const {
  switch (kind) {
    case Kind::Split:
      return make_obj({{color, x}, {color, y}});
    case Kind::Merge:
      return make_obj({{color, x + y}});
    case Kind::Cross:
      return make_obj({{color2, y}, {color, x}});
    case Kind::Coupon:
      return make_obj({{color2, x}});
  }
  return {};
}

bool Box::is_identity() const {
  switch (kind) {
    case Kind::Split:
    case Kind::Merge:
    case Kind::Cross:
      return x == 0 || y == 0;
    case Kind::Coupon:
      return x == 0;
  }
  return false;
}

Parity Box::parity(const GoodPair& p) const {
  if (kind != Kind::Coupon) return 0;
  auto par = p.parity_of(elem);
  return par ? *par : 0;
}

std::string Box::str(const GoodPair* p) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Split:
      os << "split(" << color_str(color, p) << ";" << x << "," << y << ")";
      break;
    case Kind::Merge:
      os << "merge(" << color_str(color, p) << ";" << x << "," << y << ")";
      break;
    case Kind::Cross:
      os << "cross(" << color_str(color, p) << "^(" << x << "),"
         << color_str(color2, p) << "^(" << y << "))";
      break;
    case Kind::Coupon:
      os << "coupon(";
      if (p) {
        os << elem_str(*p, elem);
      } else {
        os << "<elem>";
      }
      os << ";" << color_str(color, p) << "," << x << "->"
         << color_str(color2, p) << ")";
      break;
  }
  return os.str();
}

void diagram_check(const Diagram& d) {
  Obj cur = d.dom;
  for (size_t i = 0; i < d.layers.size(); ++i) {
    const Layer& l = d.layers[i];
    if (!(l.dom() == cur))
      throw ObjectMismatch("layer " + std::to_string(i + 1) + " expects " +
                           l.dom().str() + " but receives " + cur.str());
    cur = l.cod();
  }
  if (!(cur == d.cod))
    throw ObjectMismatch("diagram ends at " + cur.str() + ", declared " +
                         d.cod.str());
}

WebMorphism wm_zero(const Obj& dom, const Obj& cod) {
  return WebMorphism{dom.reduced(), cod.reduced(), {}};
}

WebMorphism wm_id(const Obj& o) {
  Obj r = o.reduced();
  Diagram d{r, r, {}};
  return WebMorphism{r, r, {{Rat(1), std::move(d)}}};
}

WebMorphism wm_scale(const Rat& c, const WebMorphism& m) {
  if (c == 0) return wm_zero(m.dom, m.cod);
  WebMorphism out{m.dom, m.cod, m.terms};
  for (auto& t : out.terms) t.first *= c;
  return out;
}

WebMorphism wm_add(const WebMorphism& a, const WebMorphism& b) {
  // The zero morphism is polymorphic in its endpoints (negative-thickness
  // builders yield it with nominal objects), so it never forces a check.
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!(a.dom == b.dom) || !(a.cod == b.cod))
    throw ObjectMismatch("sum of morphisms " + a.dom.str() + " -> " +
                         a.cod.str() + " and " + b.dom.str() + " -> " +
                         b.cod.str());
  WebMorphism out{a.dom, a.cod, a.terms};
  for (const auto& [c, d] : b.terms) {
    auto it = std::find_if(out.terms.begin(), out.terms.end(),
                           [&](const auto& t) { return t.second == d; });
    if (it == out.terms.end()) {
      out.terms.emplace_back(c, d);
    } else {
      it->first += c;
      if (it->first == 0) out.terms.erase(it);
    }
  }
  return out;
}

WebMorphism compose(const WebMorphism& top, const WebMorphism& bottom) {
  if (bottom.is_zero() || top.is_zero()) return wm_zero(bottom.dom, top.cod);
  if (!(bottom.cod == top.dom))
    throw ObjectMismatch("compose: lower output " + bottom.cod.str() +
                         " does not match upper input " + top.dom.str());
  WebMorphism out{bottom.dom, top.cod, {}};
  for (const auto& [cb, db] : bottom.terms)
    for (const auto& [ct, dt] : top.terms) {
      Diagram d{out.dom, out.cod, db.layers};
      d.layers.insert(d.layers.end(), dt.layers.begin(), dt.layers.end());
      out.terms.emplace_back(cb * ct, std::move(d));
    }
  return out;
}

WebMorphism tensor(const WebMorphism& a, const WebMorphism& b) {
  WebMorphism out{obj_concat(a.dom, b.dom), obj_concat(a.cod, b.cod), {}};
  for (const auto& [ca, da] : a.terms)
    for (const auto& [cb, db] : b.terms) {
      Diagram d{out.dom, out.cod, {}};
      d.layers.reserve(da.layers.size() + db.layers.size());
      // (a (x) id) after (id (x) b): normal form of the tensor product.
      for (const Layer& l : db.layers)
        d.layers.push_back({obj_concat(a.dom, l.left), l.right, l.box});
      for (const Layer& l : da.layers)
        d.layers.push_back({l.left, obj_concat(l.right, b.cod), l.box});
      out.terms.emplace_back(ca * cb, std::move(d));
    }
  return out;
}

WebMorphism whisker(const Obj& left, const WebMorphism& m, const Obj& right) {
  Obj l = left.reduced(), r = right.reduced();
  WebMorphism out{obj_concat(obj_concat(l, m.dom), r),
                  obj_concat(obj_concat(l, m.cod), r),
                  {}};
  for (const auto& [c, d] : m.terms) {
    Diagram nd{out.dom, out.cod, {}};
    nd.layers.reserve(d.layers.size());
    for (const Layer& lay : d.layers)
      nd.layers.push_back(
          {obj_concat(l, lay.left), obj_concat(lay.right, r), lay.box});
    out.terms.emplace_back(c, std::move(nd));
  }
  return out;
}

namespace {

// Single-box morphism; identities collapse, negative thickness is rejected by
// the callers before this point.
WebMorphism wm_box(Box b) {
  if (b.is_identity()) return wm_id(b.dom());
  Obj dom = b.dom(), cod = b.cod();
  Diagram d{dom, cod, {Layer{Obj{}, Obj{}, std::move(b)}}};
  return WebMorphism{dom, cod, {{Rat(1), std::move(d)}}};
}

bool any_negative(std::initializer_list<int> v) {
  return std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
}

}  // namespace

WebMorphism wm_split(int color, int x, int y) {
  if (any_negative({x, y}))
    return wm_zero(make_obj({{color, x + y}}), Obj{});
  return wm_box(Box{Box::Kind::Split, color, color, x, y, {}});
}

WebMorphism wm_merge(int color, int x, int y) {
  if (any_negative({x, y}))
    return wm_zero(Obj{}, make_obj({{color, x + y}}));
  return wm_box(Box{Box::Kind::Merge, color, color, x, y, {}});
}

WebMorphism wm_cross(int ci, int x, int cj, int y) {
  if (any_negative({x, y})) return wm_zero(Obj{}, Obj{});
  return wm_box(Box{Box::Kind::Cross, ci, cj, x, y, {}});
}

WebMorphism wm_coupon(const GoodPair& pair, const AlgebraElement& f, int ci,
                      int z, int cj) {
  Obj dom = make_obj({{ci, z}}), cod = make_obj({{cj, z}});
  if (z < 0) return wm_zero(dom, cod);
  if (z == 0) return wm_id(dom);
  if (f.empty()) return wm_zero(dom, cod);
  if (z >= 2 && !pair.in_sub_span(f))
    throw std::invalid_argument(
        "thick coupon content must lie in the even subalgebra span");
  if (ci != UNIT_COLOR && cj != UNIT_COLOR) {
    for (const auto& [b, c] : f.e) {
      (void)c;
      if (pair.color_of(pair.basis[b].left) != cj ||
          pair.color_of(pair.basis[b].right) != ci)
        throw std::invalid_argument(
            "coupon content " + pair.basis[b].id + " is outside the (" +
            color_str(cj, &pair) + "," + color_str(ci, &pair) + ") block");
    }
  }
  return wm_box(Box{Box::Kind::Coupon, ci, cj, z, 0, f});
}

WebMorphism multi_split(int color, const std::vector<int>& parts) {
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<std::pair<int, int>> row;
  for (int p : parts) row.emplace_back(color, p);
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    return wm_zero(make_obj({{color, total}}), make_obj(row));
  WebMorphism acc = wm_id(make_obj({{color, total}}));
  int consumed = 0;
  for (size_t j = 0; j + 1 < parts.size(); ++j) {
    int rest = total - consumed - parts[j];
    std::vector<std::pair<int, int>> left(row.begin(), row.begin() + j);
    acc = compose(
        whisker(make_obj(left), wm_split(color, parts[j], rest), Obj{}), acc);
    consumed += parts[j];
  }
  return acc;
}

WebMorphism multi_merge(int color, const std::vector<int>& parts) {
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<std::pair<int, int>> row;
  for (int p : parts) row.emplace_back(color, p);
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    return wm_zero(make_obj(row), make_obj({{color, total}}));
  WebMorphism acc = wm_id(make_obj(row));
  for (int j = static_cast<int>(parts.size()) - 2; j >= 0; --j) {
    int rest = 0;
    for (size_t k = j + 1; k < parts.size(); ++k) rest += parts[k];
    std::vector<std::pair<int, int>> left(row.begin(), row.begin() + j);
    acc = compose(
        whisker(make_obj(left), wm_merge(color, parts[j], rest), Obj{}), acc);
  }
  return acc;
}

WebMorphism perm_diagram(const Obj& strands, const std::vector<int>& perm,
                         Routing routing) {
  Obj src = strands.reduced();
  int k = src.count();
  if (static_cast<int>(perm.size()) != k)
    throw std::invalid_argument("permutation length does not match strands");
  std::vector<char> seen(k, 0);
  for (int p : perm) {
    if (p < 0 || p >= k || seen[p])
      throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }
  std::vector<std::pair<int, int>> dst(k);
  for (int s = 0; s < k; ++s) dst[perm[s]] = src.parts[s];

  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  WebMorphism acc = wm_id(src);
  auto emit = [&](int q) {
    std::vector<std::pair<int, int>> left, right;
    for (int p = 0; p < q; ++p) left.push_back(src.parts[cur[p]]);
    for (int p = q + 2; p < k; ++p) right.push_back(src.parts[cur[p]]);
    auto [lc, lx] = src.parts[cur[q]];
    auto [rc, rx] = src.parts[cur[q + 1]];
    acc = compose(whisker(make_obj(left), wm_cross(lc, lx, rc, rx),
                          make_obj(right)),
                  acc);
    std::swap(cur[q], cur[q + 1]);
  };

  if (routing == Routing::BubbleLeftmost) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int q = 0; q + 1 < k; ++q)
        if (perm[cur[q]] > perm[cur[q + 1]]) {
          emit(q);
          moved = true;
          break;
        }
    }
  } else {
    for (int pos = 0; pos < k; ++pos) {
      int want = -1;
      for (int s = 0; s < k; ++s)
        if (perm[s] == pos) want = s;
      int at = static_cast<int>(std::find(cur.begin(), cur.end(), want) -
                                cur.begin());
      for (int p = at; p > pos; --p) emit(p - 1);
    }
  }
  if (!(acc.cod == make_obj(dst)))
    throw ObjectMismatch("permutation routing reached " + acc.cod.str());
  return acc;
}

namespace {

WebMorphism ones_split(const Obj& o) {
  WebMorphism acc = wm_id(Obj{});
  for (auto [c, x] : o.parts)
    acc = tensor(acc, multi_split(c, std::vector<int>(x, 1)));
  return acc;
}

WebMorphism ones_merge(const Obj& o) {
  WebMorphism acc = wm_id(Obj{});
  for (auto [c, x] : o.parts)
    acc = tensor(acc, multi_merge(c, std::vector<int>(x, 1)));
  return acc;
}

}  // namespace

WebMorphism explode(const WebMorphism& m) {
  return compose(ones_split(m.cod), compose(m, ones_merge(m.dom)));
}

WebMorphism contract(const WebMorphism& m, const Obj& dom, const Obj& cod) {
  return compose(ones_merge(cod.reduced()),
                 compose(m, ones_split(dom.reduced())));
}

namespace {

// Realization of one basis multiplicity inside a composite coupon.
WebMorphism realize_basis_coupon(const GoodPair& pair, int src_color,
                                 int dst_color, int b, int mult,
                                 EtaFlavor flavor) {
  AlgebraElement eb = SparseVec::unit(b, Rat(1));
  if (mult == 1) return wm_coupon(pair, eb, src_color, 1, dst_color);
  if (flavor == EtaFlavor::A && pair.basis[b].in_sub)
    return wm_coupon(pair, eb, src_color, mult, dst_color);
  std::vector<int> ones(mult, 1);
  WebMorphism thin = wm_id(Obj{});
  for (int i = 0; i < mult; ++i)
    thin = tensor(thin, wm_coupon(pair, eb, src_color, 1, dst_color));
  return compose(multi_merge(dst_color, ones),
                 compose(thin, multi_split(src_color, ones)));
}

// Composite coupon over one grid cell: split into basis segments (declared
// basis order), realize each, merge back.
WebMorphism cell_coupon(const GoodPair& pair, int src_color, int dst_color,
                        const RestrictedComposition& cell, EtaFlavor flavor) {
  std::vector<int> parts;
  WebMorphism inner = wm_id(Obj{});
  for (const auto& [b, mult] : cell.mult) {
    parts.push_back(mult);
    inner = tensor(inner, realize_basis_coupon(pair, src_color, dst_color, b,
                                               mult, flavor));
  }
  return compose(multi_merge(dst_color, parts),
                 compose(inner, multi_split(src_color, parts)));
}

}  // namespace

WebMorphism eta(const GoodPair& pair, const Obj& src, const Obj& dst,
                const MatrixComposition& mu, EtaFlavor flavor) {
  Obj s = src.reduced(), d = dst.reduced();
  if (mu.t != s.count() || mu.u != d.count())
    throw std::invalid_argument("grid shape does not match objects");
  for (int r = 0; r < mu.t; ++r) {
    int sum = 0;
    for (int c = 0; c < mu.u; ++c) sum += mu.at(r, c).size();
    if (sum != s.parts[r].second)
      throw std::invalid_argument("grid row " + std::to_string(r + 1) +
                                  " does not sum to the source thickness");
  }
  for (int c = 0; c < mu.u; ++c) {
    int sum = 0;
    for (int r = 0; r < mu.t; ++r) sum += mu.at(r, c).size();
    if (sum != d.parts[c].second)
      throw std::invalid_argument("grid column " + std::to_string(c + 1) +
                                  " does not sum to the target thickness");
  }

  WebMorphism bottom = wm_id(Obj{});
  for (int r = 0; r < mu.t; ++r) {
    std::vector<int> parts;
    for (int c = 0; c < mu.u; ++c) parts.push_back(mu.at(r, c).size());
    bottom = tensor(bottom, multi_split(s.parts[r].first, parts));
  }

  WebMorphism mid = wm_id(Obj{});
  for (int r = 0; r < mu.t; ++r)
    for (int c = 0; c < mu.u; ++c) {
      if (mu.at(r, c).size() == 0) continue;
      mid = tensor(mid, cell_coupon(pair, s.parts[r].first, d.parts[c].first,
                                    mu.at(r, c), flavor));
    }

  // Route the (r,s) strands from row-major to column-major order.
  std::vector<std::pair<int, int>> order;  // (r,c) of nonzero cells, row-major
  std::vector<std::pair<int, int>> strands;
  for (int r = 0; r < mu.t; ++r)
    for (int c = 0; c < mu.u; ++c)
      if (mu.at(r, c).size() > 0) {
        order.emplace_back(r, c);
        strands.emplace_back(d.parts[c].first, mu.at(r, c).size());
      }
  std::vector<std::pair<int, int>> colmajor = order;
  std::sort(colmajor.begin(), colmajor.end(), [](auto a, auto b) {
    return std::make_pair(a.second, a.first) < std::make_pair(b.second, b.first);
  });
  std::vector<int> perm(order.size());
  for (size_t i = 0; i < order.size(); ++i)
    perm[i] = static_cast<int>(
        std::find(colmajor.begin(), colmajor.end(), order[i]) -
        colmajor.begin());
  WebMorphism route = perm_diagram(make_obj(strands), perm);

  WebMorphism top = wm_id(Obj{});
  for (int c = 0; c < mu.u; ++c) {
    std::vector<int> parts;
    for (int r = 0; r < mu.t; ++r) parts.push_back(mu.at(r, c).size());
    top = tensor(top, multi_merge(d.parts[c].first, parts));
  }

  return compose(top, compose(route, compose(mid, bottom)));
}

Obj weight_obj(const std::vector<int>& lambda) {
  std::vector<std::pair<int, int>> parts;
  for (int x : lambda) parts.emplace_back(UNIT_COLOR, x);
  return make_obj(std::move(parts));
}

namespace {

Obj weight_slice(const std::vector<int>& lam, int a, int b) {
  std::vector<int> v(lam.begin() + a, lam.begin() + b);
  return weight_obj(v);
}

}  // namespace

WebMorphism e_generator(const GoodPair& pair, const std::vector<int>& lambda,
                        int r, int s, const AlgebraElement& f, int t) {
  int n = static_cast<int>(lambda.size());
  if (r < 1 || r > n || s < 1 || s > n)
    throw std::invalid_argument("generator indices out of range");
  Obj dom = weight_obj(lambda);
  if (t == 0) return wm_id(dom);
  int r0 = r - 1, s0 = s - 1;
  if (t < 0 || lambda[s0] - t < 0) return wm_zero(dom, dom);
  const int U = UNIT_COLOR;
  int keep = lambda[s0] - t;
  WebMorphism cp = wm_coupon(pair, f, U, t, U);

  if (r0 == s0) {
    Obj left = weight_slice(lambda, 0, r0);
    Obj right = weight_slice(lambda, r0 + 1, n);
    WebMorphism acc = whisker(left, wm_split(U, keep, t), right);
    acc = compose(whisker(obj_concat(left, weight_obj({keep})), cp, right),
                  acc);
    return compose(whisker(left, wm_merge(U, keep, t), right), acc);
  }

  if (r0 < s0) {
    Obj tail = weight_slice(lambda, s0 + 1, n);
    WebMorphism acc =
        whisker(weight_slice(lambda, 0, s0), wm_split(U, t, keep), tail);
    Obj after = obj_concat(weight_obj({keep}), tail);
    acc = compose(whisker(weight_slice(lambda, 0, s0), cp, after), acc);
    for (int k = s0 - 1; k >= r0 + 1; --k) {
      Obj right = obj_concat(weight_slice(lambda, k + 1, s0), after);
      acc = compose(whisker(weight_slice(lambda, 0, k),
                            wm_cross(U, lambda[k], U, t), right),
                    acc);
    }
    Obj right = obj_concat(weight_slice(lambda, r0 + 1, s0), after);
    return compose(whisker(weight_slice(lambda, 0, r0),
                           wm_merge(U, lambda[r0], t), right),
                   acc);
  }

  // r0 > s0: the moving strand splits off to the right and crosses rightward.
  Obj head = weight_slice(lambda, 0, s0);
  Obj tail = weight_slice(lambda, r0 + 1, n);
  WebMorphism acc =
      whisker(head, wm_split(U, keep, t), weight_slice(lambda, s0 + 1, n));
  Obj before = obj_concat(head, weight_obj({keep}));
  acc = compose(whisker(before, cp, weight_slice(lambda, s0 + 1, n)), acc);
  for (int k = s0 + 1; k <= r0 - 1; ++k) {
    Obj left = obj_concat(before, weight_slice(lambda, s0 + 1, k));
    acc = compose(whisker(left, wm_cross(U, t, U, lambda[k]),
                          weight_slice(lambda, k + 1, n)),
                  acc);
  }
  Obj left = obj_concat(before, weight_slice(lambda, s0 + 1, r0));
  return compose(whisker(left, wm_merge(U, t, lambda[r0]), tail), acc);
}

}  // namespace webcalc
