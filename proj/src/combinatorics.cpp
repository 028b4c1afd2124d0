#include "webcalc/combinatorics.hpp"

#include <algorithm>
#include <functional>

namespace webcalc {

int Obj::total() const {
  int t = 0;
  for (auto& [c, x] : parts) t += x;
  return t;
}

Obj Obj::reduced() const {
  Obj r;
  for (auto& [c, x] : parts)
    if (x != 0) r.parts.emplace_back(c, x);
  return r;
}

std::string Obj::str(const GoodPair* pair) const {
  if (parts.empty()) return "(empty)";
  std::string s;
  for (auto& [c, x] : parts) {
    if (!s.empty()) s += " ";
    std::string color = c == UNIT_COLOR
                            ? "1"
                            : (pair ? pair->basis[pair->idems[c]].id
                                    : std::to_string(c));
    s += color + "^(" + std::to_string(x) + ")";
  }
  return s;
}

Obj obj_concat(const Obj& a, const Obj& b) {
  Obj r = a;
  r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
  return r;
}

int RestrictedComposition::size() const {
  int t = 0;
  for (auto& [b, m] : mult) t += m;
  return t;
}

int RestrictedComposition::of(int b) const {
  for (auto& [k, m] : mult)
    if (k == b) return m;
  return 0;
}

std::string MatrixComposition::str(const GoodPair& pair) const {
  std::string s;
  for (int r = 0; r < t; ++r)
    for (int su = 0; su < u; ++su)
      for (auto& [b, m] : at(r, su).mult) {
        if (!s.empty()) s += ", ";
        s += "(" + std::to_string(r + 1) + "," + std::to_string(su + 1) +
             "):" + pair.basis[b].id +
             (m > 1 ? "x" + std::to_string(m) : "");
      }
  return s.empty() ? "(empty grid)" : s;
}

std::vector<int> basis_block(const GoodPair& pair, int left_color,
                             int right_color) {
  std::vector<int> out;
  for (int b = 0; b < pair.dim(); ++b) {
    if (left_color != UNIT_COLOR && pair.basis[b].left != pair.idems[left_color])
      continue;
    if (right_color != UNIT_COLOR &&
        pair.basis[b].right != pair.idems[right_color])
      continue;
    out.push_back(b);
  }
  return out;
}

std::vector<Obj> enum_colored(int ncolors, int n, int d) {
  std::vector<Obj> out;
  Obj cur;
  std::function<void(int, int)> rec = [&](int parts_left, int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (parts_left == 0) return;
    for (int x = 1; x <= rem; ++x)
      for (int c = 0; c < ncolors; ++c) {
        cur.parts.emplace_back(c, x);
        rec(parts_left - 1, rem - x);
        cur.parts.pop_back();
      }
  };
  rec(n, d);
  return out;
}

std::vector<std::vector<int>> enum_compositions(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int k, int rem) {
    if (k == 0) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int x = rem; x >= 0; --x) {
      cur.push_back(x);
      rec(k - 1, rem - x);
      cur.pop_back();
    }
  };
  rec(n, d);
  return out;
}

namespace {

// All restricted compositions of total m over the given block, multiplicity
// vectors in descending lex order.
void enum_restricted(const GoodPair& pair, const std::vector<int>& block,
                     int m, std::vector<RestrictedComposition>& out) {
  RestrictedComposition cur;
  std::function<void(size_t, int)> rec = [&](size_t k, int rem) {
    if (rem == 0) {
      // Remaining block elements get multiplicity zero.
      out.push_back(cur);
      return;
    }
    if (k == block.size()) return;
    int b = block[k];
    int cap = pair.basis[b].parity == 1 ? std::min(rem, 1) : rem;
    for (int c = cap; c >= 1; --c) {
      cur.mult.emplace_back(b, c);
      rec(k + 1, rem - c);
      cur.mult.pop_back();
    }
    rec(k + 1, rem);
  };
  rec(0, m);
}

}  // namespace

std::vector<MatrixComposition> enum_M(const GoodPair& pair, const Obj& src,
                                      const Obj& dst) {
  std::vector<MatrixComposition> out;
  if (src.total() != dst.total()) return out;
  int t = src.count(), u = dst.count();
  MatrixComposition cur;
  cur.t = t;
  cur.u = u;
  cur.cell.resize(static_cast<size_t>(t) * u);
  std::vector<int> col_left(u);
  for (int s = 0; s < u; ++s) col_left[s] = dst.parts[s].second;

  // Cache per-cell composition lists keyed by (cell, size).
  std::vector<std::vector<std::vector<RestrictedComposition>>> cache(
      static_cast<size_t>(t) * u);

  std::function<void(int, int, int)> rec = [&](int r, int s, int row_rem) {
    if (r == t) {
      for (int k = 0; k < u; ++k)
        if (col_left[k] != 0) return;
      out.push_back(cur);
      return;
    }
    if (s == u) {
      if (row_rem == 0) rec(r + 1, 0, r + 1 < t ? src.parts[r + 1].second : 0);
      return;
    }
    int cell_idx = r * u + s;
    auto& by_size = cache[cell_idx];
    int max_m = std::min(row_rem, col_left[s]);
    // Larger cell totals first keeps the flattened multiplicity vector
    // ordering descending.
    for (int m = max_m; m >= 0; --m) {
      if (static_cast<int>(by_size.size()) <= m) by_size.resize(m + 1);
      if (m > 0 && by_size[m].empty()) {
        std::vector<int> block = basis_block(
            pair, dst.parts[s].first, src.parts[r].first);
        enum_restricted(pair, block, m, by_size[m]);
      }
      if (m == 0) {
        cur.at(r, s) = RestrictedComposition();
        col_left[s] -= m;
        rec(r, s + 1, row_rem - m);
        col_left[s] += m;
      } else {
        for (const auto& rc : by_size[m]) {
          cur.at(r, s) = rc;
          col_left[s] -= m;
          rec(r, s + 1, row_rem - m);
          col_left[s] += m;
        }
      }
    }
  };
  rec(0, 0, t > 0 ? src.parts[0].second : 0);
  return out;
}

Rat bang(const MatrixComposition& m, const std::vector<char>& mask) {
  Int r = 1;
  for (const auto& rc : m.cell)
    for (auto& [b, c] : rc.mult)
      if (mask[b]) r *= factorial(c);
  return Rat(r);
}

std::vector<char> sub_mask(const GoodPair& pair) {
  std::vector<char> m(pair.dim());
  for (int b = 0; b < pair.dim(); ++b) m[b] = pair.basis[b].in_sub;
  return m;
}

std::vector<char> complement_mask(std::vector<char> mask) {
  for (auto& c : mask) c = !c;
  return mask;
}

namespace {

void enum_partitions(int d, int max_part,
                     const std::function<bool(const Partition&)>& admit,
                     std::vector<Partition>& out) {
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int cap) {
    if (rem == 0) {
      if (admit(cur)) out.push_back(cur);
      return;
    }
    for (int x = std::min(rem, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(rem - x, x);
      cur.pop_back();
    }
  };
  rec(d, max_part);
}

}  // namespace

std::vector<Multipartition> enum_multipartitions(const GoodPair& pair, int n,
                                                 int d) {
  if (pair.simples.empty())
    throw std::invalid_argument("no simple-module data for algebra '" +
                                pair.name + "'");
  // Per-type admissible partitions by weight.
  std::vector<std::vector<std::vector<Partition>>> parts_by_type;
  for (const auto& st : pair.simples) {
    std::vector<std::vector<Partition>> by_weight(d + 1);
    for (int w = 0; w <= d; ++w) {
      if (st.kind == 'M') {
        int M = n * st.m, N = n * st.n;
        enum_partitions(
            w, w,
            [&](const Partition& p) {
              return static_cast<int>(p.size()) <= M ||
                     p[M] <= N;
            },
            by_weight[w]);
      } else {
        int N = n * st.n;
        enum_partitions(
            w, w,
            [&](const Partition& p) {
              if (static_cast<int>(p.size()) > N) return false;
              for (size_t k = 0; k + 1 < p.size(); ++k)
                if (p[k] == p[k + 1]) return false;
              return true;
            },
            by_weight[w]);
      }
    }
    parts_by_type.push_back(std::move(by_weight));
  }

  std::vector<Multipartition> out;
  Multipartition cur(pair.simples.size());
  std::function<void(size_t, int)> rec = [&](size_t k, int rem) {
    if (k == pair.simples.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int w = rem; w >= 0; --w)
      for (const auto& p : parts_by_type[k][w]) {
        cur[k] = p;
        rec(k + 1, rem - w);
        cur[k].clear();
      }
  };
  rec(0, d);
  return out;
}

}  // namespace webcalc
