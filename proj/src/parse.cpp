#include "webcalc/parse.hpp"

#include <cctype>
#include <vector>

namespace webcalc {

namespace {

// One line of input with its 1-based position; col(i) maps an offset within
// text back to a column.
struct Line {
  std::string text;
  int number = 0;
};

std::vector<Line> split_lines(const std::string& s) {
  std::vector<Line> out;
  std::string cur;
  int n = 1;
  for (char ch : s) {
    if (ch == '\n') {
      out.push_back({cur, n++});
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back({cur, n});
  return out;
}

bool id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Character scanner over one string slice. Column numbers are 1-based and
// offset by where the slice starts in its line.
struct Scan {
  std::string s;
  size_t i = 0;
  int line;
  int col0;  // column of s[0]

  int col() const { return col0 + static_cast<int>(i); }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col());
  }
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && id_char(s[i])) ++i;
    if (i == start) fail("expected identifier");
    return s.substr(start, i - start);
  }
  long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected integer");
    return std::stol(s.substr(start, i - start));
  }
  Rat rational() {
    long p = integer();
    if (accept('/')) {
      long q = integer();
      if (q == 0) fail("zero denominator");
      return rat(p, q);
    }
    return Rat(p);
  }
};

int resolve_color(const GoodPair& pair, const std::string& id, Scan& sc) {
  int b = pair.index_of(id);
  if (b < 0) sc.fail("unknown basis id '" + id + "'");
  int c = pair.color_of(b);
  if (c < 0) sc.fail("'" + id + "' is not an idempotent");
  return c;
}

// part := id ^ ( int )
std::pair<int, int> parse_part(const GoodPair& pair, Scan& sc) {
  int c = resolve_color(pair, sc.ident(), sc);
  sc.expect('^');
  sc.expect('(');
  long x = sc.integer();
  sc.expect(')');
  return {c, static_cast<int>(x)};
}

Obj parse_obj_scan(const GoodPair& pair, Scan& sc) {
  std::vector<std::pair<int, int>> parts;
  while (!sc.done()) parts.push_back(parse_part(pair, sc));
  Obj o;
  o.parts = std::move(parts);
  return o;
}

AlgebraElement parse_elem_scan(const GoodPair& pair, Scan& sc) {
  SparseVecBuilder out;
  bool first = true;
  while (true) {
    Rat sign(1);
    if (sc.accept('-')) {
      sign = Rat(-1);
    } else if (sc.accept('+')) {
    } else if (!first) {
      break;
    }
    first = false;
    sc.skip_ws();
    // A bare token that names a basis element is that element, numerals
    // included; a token followed by '*' (or carrying a '/') is a scalar.
    size_t save = sc.i;
    std::string tok;
    while (sc.i < sc.s.size() && id_char(sc.s[sc.i])) tok.push_back(sc.s[sc.i++]);
    Rat coeff = sign;
    std::string id = tok;
    bool scalar_ahead = sc.peek() == '*' || sc.peek() == '/';
    if (tok.empty() || scalar_ahead || pair.index_of(tok) < 0) {
      sc.i = save;
      coeff = sign * sc.rational();
      sc.expect('*');
      id = sc.ident();
    }
    int b = pair.index_of(id);
    if (b < 0) sc.fail("unknown basis id '" + id + "'");
    out.add(b, coeff);
    if (sc.done()) break;
    char c = sc.peek();
    if (c != '+' && c != '-') break;
  }
  return out.build();
}

// box := id(obj) | split(i;x,y) | merge(i;x,y) | cross(part,part)
//      | coupon(expr; i,x -> j)
WebMorphism parse_box(const GoodPair& pair, Scan& sc) {
  std::string head = sc.ident();
  sc.expect('(');
  WebMorphism m;
  if (head == "id") {
    size_t depth = 1, start = sc.i;
    while (sc.i < sc.s.size() && depth > 0) {
      if (sc.s[sc.i] == '(') ++depth;
      if (sc.s[sc.i] == ')') --depth;
      ++sc.i;
    }
    if (depth > 0) sc.fail("unterminated id(...)");
    Scan inner{sc.s.substr(start, sc.i - 1 - start), 0, sc.line,
               sc.col0 + static_cast<int>(start)};
    return wm_id(parse_obj_scan(pair, inner));
  }
  if (head == "split" || head == "merge") {
    int c = resolve_color(pair, sc.ident(), sc);
    sc.expect(';');
    long x = sc.integer();
    sc.expect(',');
    long y = sc.integer();
    sc.expect(')');
    return head == "split" ? wm_split(c, static_cast<int>(x), static_cast<int>(y))
                           : wm_merge(c, static_cast<int>(x), static_cast<int>(y));
  }
  if (head == "cross") {
    auto [ci, x] = parse_part(pair, sc);
    sc.expect(',');
    auto [cj, y] = parse_part(pair, sc);
    sc.expect(')');
    return wm_cross(ci, x, cj, y);
  }
  if (head == "coupon") {
    size_t semi = std::string::npos, depth = 0;
    for (size_t k = sc.i; k < sc.s.size(); ++k) {
      if (sc.s[k] == '(') ++depth;
      else if (sc.s[k] == ')') {
        if (depth == 0) break;
        --depth;
      } else if (sc.s[k] == ';' && depth == 0) {
        semi = k;
        break;
      }
    }
    if (semi == std::string::npos) sc.fail("expected ';' in coupon");
    Scan es{sc.s.substr(sc.i, semi - sc.i), 0, sc.line,
            sc.col0 + static_cast<int>(sc.i)};
    AlgebraElement f = parse_elem_scan(pair, es);
    if (!es.done()) es.fail("trailing input in element expression");
    sc.i = semi + 1;
    int ci = resolve_color(pair, sc.ident(), sc);
    sc.expect(',');
    long z = sc.integer();
    sc.expect('-');
    sc.expect('>');
    int cj = resolve_color(pair, sc.ident(), sc);
    sc.expect(')');
    try {
      return wm_coupon(pair, f, ci, static_cast<int>(z), cj);
    } catch (const std::invalid_argument& e) {
      sc.fail(e.what());
    }
  }
  sc.fail("unknown box '" + head + "'");
}

// layer := [ box , box , ... ]  tensored left to right
WebMorphism parse_layer(const GoodPair& pair, const Line& ln) {
  Scan sc{ln.text, 0, ln.number, 1};
  sc.expect('[');
  WebMorphism acc = wm_id(Obj{});
  if (!sc.accept(']')) {
    while (true) {
      acc = tensor(acc, parse_box(pair, sc));
      if (sc.accept(']')) break;
      sc.expect(',');
    }
  }
  if (!sc.done()) sc.fail("trailing input after layer");
  return acc;
}

bool starts_with(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct FileReader {
  std::vector<Line> lines;
  size_t pos = 0;

  explicit FileReader(const std::string& text) {
    for (Line& l : split_lines(text)) {
      size_t hash = l.text.find('#');
      std::string body = hash == std::string::npos ? l.text : l.text.substr(0, hash);
      if (strip(body).empty()) continue;
      lines.push_back({body, l.number});
    }
  }
  bool done() const { return pos >= lines.size(); }
  const Line& peek() const { return lines[pos]; }
  Line next() { return lines[pos++]; }
  int eof_line() const { return lines.empty() ? 1 : lines.back().number; }
};

WebMorphism parse_diagram_block(const GoodPair& pair, FileReader& rd) {
  if (rd.done() || !starts_with(strip(rd.peek().text), "dom:"))
    throw ParseError("expected 'dom:'", rd.done() ? rd.eof_line() : rd.peek().number, 1);
  Line dom_line = rd.next();
  std::string rest = strip(dom_line.text);
  rest = rest.substr(4);
  Scan ds{rest, 0, dom_line.number, 1};
  Obj dom = parse_obj_scan(pair, ds);

  if (rd.done() || strip(rd.peek().text) != "layers:")
    throw ParseError("expected 'layers:'", rd.done() ? rd.eof_line() : rd.peek().number, 1);
  rd.next();

  WebMorphism acc = wm_id(dom);
  int layer_no = 0;
  while (!rd.done() && starts_with(strip(rd.peek().text), "[")) {
    Line ln = rd.next();
    ++layer_no;
    WebMorphism layer = parse_layer(pair, ln);
    try {
      acc = compose(layer, acc);
    } catch (const ObjectMismatch& e) {
      throw ParseError("layer " + std::to_string(layer_no) + ": " + e.what(),
                       ln.number, 1);
    }
  }
  return acc;
}

}  // namespace

AlgebraElement parse_elem(const GoodPair& pair, const std::string& text) {
  Scan sc{text, 0, 1, 1};
  AlgebraElement e = parse_elem_scan(pair, sc);
  if (!sc.done()) sc.fail("trailing input in element expression");
  return e;
}

Obj parse_obj(const GoodPair& pair, const std::string& text) {
  Scan sc{text, 0, 1, 1};
  return parse_obj_scan(pair, sc);
}

WebMorphism parse_morphism(const GoodPair& pair, const std::string& text) {
  FileReader rd(text);
  if (rd.done()) throw ParseError("empty morphism file", 1, 1);
  if (strip(rd.peek().text) != "terms:") return parse_diagram_block(pair, rd);
  rd.next();
  WebMorphism sum;
  bool any = false;
  while (!rd.done()) {
    std::string head = strip(rd.peek().text);
    if (!starts_with(head, "coeff:"))
      throw ParseError("expected 'coeff:'", rd.peek().number, 1);
    Line cl = rd.next();
    Scan cs{head.substr(6), 0, cl.number, 7};
    Rat c = cs.rational();
    if (!cs.done()) cs.fail("trailing input after coefficient");
    WebMorphism d = parse_diagram_block(pair, rd);
    d = wm_scale(c, d);
    try {
      sum = any ? wm_add(sum, d) : d;
    } catch (const ObjectMismatch& e) {
      throw ParseError(e.what(), cl.number, 1);
    }
    any = true;
  }
  if (!any) throw ParseError("'terms:' lists no terms", rd.eof_line(), 1);
  return sum;
}

}  // namespace webcalc
