#include "webcalc/algebra.hpp"

#include <nlohmann/json.hpp>

namespace webcalc {

int GoodPair::index_of(const std::string& id) const {
  for (int k = 0; k < dim(); ++k)
    if (basis[k].id == id) return k;
  return -1;
}

int GoodPair::color_of(int b) const {
  for (int k = 0; k < colors(); ++k)
    if (idems[k] == b) return k;
  return -1;
}

AlgebraElement GoodPair::multiply(const AlgebraElement& x,
                                  const AlgebraElement& y) const {
  SparseVecBuilder out;
  for (const auto& [l, cl] : x.e)
    for (const auto& [r, cr] : y.e) {
      const AlgebraElement& t = prod[l][r];
      Rat c = cl * cr;
      for (const auto& [b, cb] : t.e) out.add(b, c * cb);
    }
  return out.build();
}

AlgebraElement GoodPair::unit() const {
  SparseVecBuilder b;
  for (int i : idems) b.add(i, Rat(1));
  return b.build();
}

std::optional<Parity> GoodPair::parity_of(const AlgebraElement& x) const {
  if (x.empty()) return 0;
  Parity p = basis[x.e.front().first].parity;
  for (const auto& [b, c] : x.e)
    if (basis[b].parity != p) return std::nullopt;
  return p;
}

bool GoodPair::in_sub_span(const AlgebraElement& x) const {
  for (const auto& [b, c] : x.e)
    if (!basis[b].in_sub) return false;
  return true;
}

void GoodPair::finalize() {
  prod.resize(dim());
  for (auto& row : prod) row.resize(dim());
  for (int i : idems) {
    for (int b = 0; b < dim(); ++b) {
      if (basis[b].left == i && prod[i][b].empty())
        prod[i][b] = SparseVec::unit(b);
      if (basis[b].right == i && prod[b][i].empty())
        prod[b][i] = SparseVec::unit(b);
    }
  }
}

ValidationReport GoodPair::validate() const {
  ValidationReport rep;
  auto bad = [&](const std::string& m) { rep.violations.push_back(m); };

  for (int k = 0; k < colors(); ++k) {
    int i = idems[k];
    if (i < 0 || i >= dim()) {
      bad("idempotents[" + std::to_string(k) + "]: not a basis element");
      continue;
    }
    const BasisElement& e = basis[i];
    if (e.parity != 0) bad("idempotent " + e.id + ": parity must be even");
    if (e.left != i || e.right != i)
      bad("idempotent " + e.id + ": must lie in iAi");
    if (!e.in_sub) bad("idempotent " + e.id + ": must lie in the sub-basis");
    if (!(basis_prod(i, i) == SparseVec::unit(i)))
      bad("idempotent " + e.id + ": i*i != i");
  }

  for (int l = 0; l < dim(); ++l)
    for (int r = 0; r < dim(); ++r) {
      const AlgebraElement& t = basis_prod(l, r);
      if (t.empty()) continue;
      std::string where = basis[l].id + "*" + basis[r].id;
      if (basis[l].right != basis[r].left)
        bad(where + ": nonzero despite idempotent mismatch");
      for (const auto& [b, c] : t.e) {
        if (basis[b].left != basis[l].left || basis[b].right != basis[r].right)
          bad(where + ": term " + basis[b].id + " outside jAi block");
        if (basis[b].parity != ((basis[l].parity + basis[r].parity) % 2))
          bad(where + ": term " + basis[b].id + " violates parity additivity");
      }
    }

  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b)
      for (int c = 0; c < dim(); ++c) {
        AlgebraElement lhs = multiply(basis_prod(a, b), SparseVec::unit(c));
        AlgebraElement rhs = multiply(SparseVec::unit(a), basis_prod(b, c));
        if (!(lhs == rhs))
          bad("associativity fails on (" + basis[a].id + "," + basis[b].id +
              "," + basis[c].id + ")");
      }

  AlgebraElement one = unit();
  for (int b = 0; b < dim(); ++b) {
    if (!(multiply(one, SparseVec::unit(b)) == SparseVec::unit(b)))
      bad("unit law fails on left of " + basis[b].id);
    if (!(multiply(SparseVec::unit(b), one) == SparseVec::unit(b)))
      bad("unit law fails on right of " + basis[b].id);
  }

  for (int b = 0; b < dim(); ++b)
    if (basis[b].in_sub && basis[b].parity != 0)
      bad("sub-basis element " + basis[b].id + ": must be even (a <= A_0)");

  for (int l = 0; l < dim(); ++l)
    for (int r = 0; r < dim(); ++r)
      if (basis[l].in_sub && basis[r].in_sub &&
          !in_sub_span(basis_prod(l, r)))
        bad("sub-span not closed: " + basis[l].id + "*" + basis[r].id);

  rep.notes.push_back("k-freeness of a/kI holds vacuously over a field");
  return rep;
}

namespace {

GoodPair start_pair(const std::string& name) {
  GoodPair p;
  p.name = name;
  return p;
}

int add_basis(GoodPair& p, const std::string& id, int left, int right,
              Parity parity, bool in_sub) {
  p.basis.push_back({id, left, right, parity, in_sub});
  return p.dim() - 1;
}

GoodPair make_trivial() {
  GoodPair p = start_pair("trivial");
  int one = add_basis(p, "1", 0, 0, 0, true);
  p.idems = {one};
  p.semisimple = true;
  p.simples = {{'M', 1, 0}};
  p.finalize();
  return p;
}

GoodPair make_cyclic(int r) {
  GoodPair p = start_pair("cyclic(" + std::to_string(r) + ")");
  for (int k = 0; k < r; ++k)
    add_basis(p, k == 0 ? "1" : (k == 1 ? "g" : "g" + std::to_string(k)), 0, 0,
              0, true);
  p.idems = {0};
  p.semisimple = true;
  p.simples.assign(r, {'M', 1, 0});
  p.finalize();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) p.prod[a][b] = SparseVec::unit((a + b) % r);
  return p;
}

GoodPair make_clifford1() {
  GoodPair p = start_pair("clifford1");
  int one = add_basis(p, "1", 0, 0, 0, true);
  int c = add_basis(p, "c", 0, 0, 1, false);
  p.idems = {one};
  p.semisimple = true;
  p.simples = {{'Q', 1, 1}};
  p.finalize();
  p.prod[c][c] = SparseVec::unit(one);
  return p;
}

GoodPair make_kxk() {
  GoodPair p = start_pair("kxk");
  int e1 = add_basis(p, "e1", 0, 0, 0, true);
  int e2 = add_basis(p, "e2", 1, 1, 0, true);
  p.idems = {e1, e2};
  p.semisimple = true;
  p.simples = {{'M', 1, 0}, {'M', 1, 0}};
  p.finalize();
  return p;
}

// Zigzag superalgebra of the path A_m with all product signs +1. Basis order:
// vertex blocks (idempotent, loop) in vertex order, then arrow pairs per edge.
GoodPair make_zigzag(int m) {
  GoodPair p = start_pair("zigzag(A" + std::to_string(m) + ")");
  std::vector<int> vert(m), loop(m);
  for (int v = 0; v < m; ++v) {
    vert[v] = add_basis(p, std::to_string(v + 1), 0, 0, 0, true);
    p.basis.back().left = p.basis.back().right = vert[v];
    loop[v] = add_basis(p, "c" + std::to_string(v + 1), vert[v], vert[v], 0,
                        false);
  }
  std::vector<std::pair<int, std::pair<int, int>>> arrows;
  for (int v = 0; v + 1 < m; ++v) {
    std::string ij = std::to_string(v + 1) + std::to_string(v + 2);
    std::string ji = std::to_string(v + 2) + std::to_string(v + 1);
    int aij = add_basis(p, "a" + ij, vert[v], vert[v + 1], 1, false);
    int aji = add_basis(p, "a" + ji, vert[v + 1], vert[v], 1, false);
    arrows.push_back({aij, {v, v + 1}});
    arrows.push_back({aji, {v + 1, v}});
  }
  p.idems = vert;
  p.semisimple = false;
  p.finalize();
  // a_ij a_ji = c_i; every other non-unit product vanishes.
  for (const auto& [a, ends] : arrows)
    for (const auto& [b, ends2] : arrows)
      if (ends.second == ends2.first && ends.first == ends2.second)
        p.prod[a][b] = SparseVec::unit(loop[ends.first]);
  return p;
}

}  // namespace

GoodPair builtin_pair(const std::string& name) {
  if (name == "trivial") return make_trivial();
  if (name == "clifford1") return make_clifford1();
  if (name == "kxk") return make_kxk();
  if (name.rfind("cyclic(", 0) == 0 && name.back() == ')') {
    int r = std::stoi(name.substr(7, name.size() - 8));
    if (r < 1) throw std::invalid_argument("cyclic(r) needs r >= 1");
    return make_cyclic(r);
  }
  if (name.rfind("zigzag(", 0) == 0 && name.back() == ')') {
    std::string arg = name.substr(7, name.size() - 8);
    if (!arg.empty() && (arg[0] == 'A' || arg[0] == 'a')) arg = arg.substr(1);
    int m = std::stoi(arg);
    if (m < 2) throw std::invalid_argument("zigzag needs a path with >= 2 vertices");
    return make_zigzag(m);
  }
  throw std::invalid_argument("unknown builtin algebra: " + name);
}

GoodPair make_subpair_kI(const GoodPair& p) {
  GoodPair q = p;
  q.name = p.name + "/kI";
  for (auto& b : q.basis) b.in_sub = false;
  for (int i : q.idems) q.basis[i].in_sub = true;
  return q;
}

GoodPair pair_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw AlgebraFileError(std::string("not valid JSON: ") + e.what());
  }
  auto need = [&](const nlohmann::json& node, const char* key,
                  const std::string& path) -> const nlohmann::json& {
    if (!node.contains(key)) throw AlgebraFileError(path + "." + key + ": missing");
    return node[key];
  };

  GoodPair p;
  p.name = need(j, "name", "$").get<std::string>();

  std::vector<std::string> idem_ids;
  for (const auto& v : need(j, "idempotents", "$"))
    idem_ids.push_back(v.get<std::string>());

  struct RawBasis {
    std::string id, left, right;
    int parity;
  };
  std::vector<RawBasis> raw;
  // Idempotents are implicitly basis elements when not declared explicitly.
  const auto& basis_node = need(j, "basis", "$");
  for (size_t k = 0; k < basis_node.size(); ++k) {
    std::string path = "basis[" + std::to_string(k) + "]";
    const auto& b = basis_node[k];
    RawBasis rb;
    rb.id = need(b, "id", path).get<std::string>();
    rb.left = need(b, "left", path).get<std::string>();
    rb.right = need(b, "right", path).get<std::string>();
    rb.parity = need(b, "parity", path).get<int>();
    if (rb.parity != 0 && rb.parity != 1)
      throw AlgebraFileError(path + ".parity: must be 0 or 1");
    raw.push_back(rb);
  }
  std::vector<RawBasis> implicit;
  for (const auto& id : idem_ids) {
    bool found = false;
    for (const auto& rb : raw) found |= rb.id == id;
    if (!found) implicit.push_back({id, id, id, 0});
  }
  raw.insert(raw.begin(), implicit.begin(), implicit.end());

  for (const auto& rb : raw) p.basis.push_back({rb.id, -1, -1, rb.parity, false});
  auto idx = [&](const std::string& id, const std::string& path) {
    int k = p.index_of(id);
    if (k < 0) throw AlgebraFileError(path + ": unknown basis id '" + id + "'");
    return k;
  };
  for (size_t k = 0; k < raw.size(); ++k) {
    std::string path = "basis[" + std::to_string(k) + "]";
    p.basis[k].left = idx(raw[k].left, path + ".left");
    p.basis[k].right = idx(raw[k].right, path + ".right");
  }
  for (size_t k = 0; k < idem_ids.size(); ++k)
    p.idems.push_back(idx(idem_ids[k], "idempotents[" + std::to_string(k) + "]"));
  for (int i : p.idems) p.basis[i].in_sub = true;

  if (j.contains("sub"))
    for (size_t k = 0; k < j["sub"].size(); ++k)
      p.basis[idx(j["sub"][k].get<std::string>(),
                  "sub[" + std::to_string(k) + "]")]
          .in_sub = true;

  p.finalize();
  if (j.contains("products"))
    for (size_t k = 0; k < j["products"].size(); ++k) {
      std::string path = "products[" + std::to_string(k) + "]";
      const auto& e = j["products"][k];
      int l = idx(need(e, "l", path).get<std::string>(), path + ".l");
      int r = idx(need(e, "r", path).get<std::string>(), path + ".r");
      SparseVecBuilder terms;
      const auto& tn = need(e, "terms", path);
      for (size_t t = 0; t < tn.size(); ++t) {
        std::string tpath = path + ".terms[" + std::to_string(t) + "]";
        int b = idx(need(tn[t], "b", tpath).get<std::string>(), tpath + ".b");
        Rat c;
        try {
          c = rat_parse(need(tn[t], "c", tpath).get<std::string>());
        } catch (const std::exception& ex) {
          throw AlgebraFileError(tpath + ".c: " + ex.what());
        }
        terms.add(b, c);
      }
      p.prod[l][r] = terms.build();
    }
  return p;
}

std::string elem_str(const GoodPair& p, const AlgebraElement& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [b, c] : x.e) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += rat_str(c) + "*";
    s += p.basis[b].id;
  }
  return s;
}

}  // namespace webcalc
