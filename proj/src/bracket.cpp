#include "mvt/bracket.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mvt {

std::string symbol_text(int s) {
  if (is_point_symbol(s)) return std::to_string(s);
  if (s == kSymQ) return "q";
  if (s > kSymQ && s < 2 * kSymQ) return "q_" + std::to_string(s - kSymQ);
  if (is_basis_symbol(s)) return "e_" + std::to_string(s - kSymE);
  throw std::invalid_argument("unknown symbol code " + std::to_string(s));
}

SignedBracket normalize_bracket(int a, int b, int c) {
  if (a == b || a == c || b == c) return {0, {0, 0, 0}};
  int sign = 1;
  std::array<int, 3> v{a, b, c};
  // Bubble sort, tracking the permutation parity.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j + 1 < 3 - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  return {sign, v};
}

// --- BracketPoly --------------------------------------------------------------------

BracketPoly BracketPoly::constant(const Q& c) {
  BracketPoly p;
  p.add_term({}, c);
  return p;
}

BracketPoly BracketPoly::bracket(int a, int b, int c) {
  BracketPoly p;
  auto nb = normalize_bracket(a, b, c);
  if (nb.sign != 0) p.add_term({nb.bracket}, Q(nb.sign));
  return p;
}

void BracketPoly::add_term(const Monomial& m, const Q& c) {
  if (c == 0) return;
  Monomial key = m;
  std::sort(key.begin(), key.end());
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::set<int> BracketPoly::symbols() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_)
    for (const auto& b : m) s.insert(b.begin(), b.end());
  return s;
}

BracketPoly BracketPoly::operator+(const BracketPoly& o) const {
  BracketPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

BracketPoly BracketPoly::operator-(const BracketPoly& o) const {
  BracketPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

BracketPoly BracketPoly::operator-() const { return scaled(Q(-1)); }

BracketPoly BracketPoly::operator*(const BracketPoly& o) const {
  BracketPoly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

BracketPoly BracketPoly::scaled(const Q& c) const {
  BracketPoly r;
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

BracketPoly BracketPoly::sign_normalized() const {
  if (terms_.empty() || terms_.begin()->second > 0) return *this;
  return -*this;
}

// --- text format ----------------------------------------------------------------------

std::string to_text(const BracketPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    out += c < 0 ? "-" : "+";
    Q a = abs(c);
    if (a != 1 || m.empty()) out += to_string(a);
    for (const auto& b : m) {
      out += "[";
      for (int i = 0; i < 3; ++i) out += (i ? "," : "") + symbol_text(b[i]);
      out += "]";
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
  }

  BracketPoly parse() {
    BracketPoly out;
    if (text_ == "0") return out;
    if (text_.empty()) fail("empty polynomial");
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (pos_ != 0) {
        fail("expected '+' or '-'");
      }
      Q coef(sign);
      bool have_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string num;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) num += get();
        coef *= parse_rational(num);
        have_number = true;
      }
      if (!have_number && peek() != '[') fail("expected a coefficient or a bracket");
      Monomial mono;
      while (pos_ < text_.size() && peek() == '[') {
        auto [s, b] = bracket();
        if (s == 0) {
          coef = 0;
        } else {
          coef *= s;
          mono.push_back(b);
        }
      }
      out.add_term(mono, coef);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  int number() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) fail("expected digits");
    return std::stoi(digits);
  }

  int aux_symbol() {
    char c = get();
    if (c == 'q') {
      if (peek() == '_') {
        get();
        return sym_q(number());
      }
      if (std::isdigit(static_cast<unsigned char>(peek()))) return sym_q(number());
      return sym_q();
    }
    if (c == 'e') {
      if (peek() == '_') get();
      int i = number();
      if (i < 1 || i > 3) fail("basis index must be 1..3");
      return sym_e(i);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::pair<int, Bracket> bracket() {
    get();  // '['
    int sign = 1;
    if (peek() == '-') {
      get();
      sign = -1;
    }
    std::vector<int> syms;
    bool commas = text_.find(',', pos_) < text_.find(']', pos_);
    if (commas) {
      for (;;) {
        if (std::isdigit(static_cast<unsigned char>(peek())))
          syms.push_back(number());
        else
          syms.push_back(aux_symbol());
        if (peek() == ',') {
          get();
          continue;
        }
        break;
      }
    } else {
      while (peek() != ']' && pos_ < text_.size()) {
        if (std::isdigit(static_cast<unsigned char>(peek())))
          syms.push_back(get() - '0');
        else
          syms.push_back(aux_symbol());
      }
    }
    if (get() != ']') fail("expected ']'");
    if (syms.size() != 3) fail("a bracket has exactly three entries");
    for (int s : syms)
      if (s == 0) fail("point 0 does not exist");
    auto nb = normalize_bracket(syms[0], syms[1], syms[2]);
    return {sign * nb.sign, nb.bracket};
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

BracketPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

// --- evaluation ------------------------------------------------------------------

namespace {

const Vec3& lookup(const Assignment& asg, int s) {
  auto it = asg.find(s);
  if (it == asg.end()) throw std::invalid_argument("no vector assigned to symbol " + symbol_text(s));
  return it->second;
}

}  // namespace

Q evaluate(const BracketPoly& p, const Assignment& asg) {
  Q total = 0;
  std::map<Bracket, Q> cache;
  for (const auto& [m, c] : p.terms()) {
    Q term = c;
    for (const auto& b : m) {
      auto it = cache.find(b);
      if (it == cache.end()) it = cache.emplace(b, det3(lookup(asg, b[0]), lookup(asg, b[1]), lookup(asg, b[2]))).first;
      term *= it->second;
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

Assignment random_assignment(const std::set<int>& symbols, Sampler& rng) {
  Assignment a;
  for (int s : symbols) {
    if (is_basis_symbol(s))
      a[s] = unit_vec(s - kSymE);
    else
      a[s] = rng.vec();
  }
  return a;
}

Assignment assignment_from(const VectorConfig& cfg) {
  Assignment a;
  for (int p = 1; p <= cfg.size(); ++p) a[p] = cfg[p];
  for (int i = 1; i <= 3; ++i) a[sym_e(i)] = unit_vec(i);
  return a;
}

bool identity_test(const BracketPoly& p, const BracketPoly& r, int trials, std::uint64_t seed, bool up_to_sign,
                   Exec exec) {
  std::set<int> syms = p.symbols();
  auto rs = r.symbols();
  syms.insert(rs.begin(), rs.end());
  std::vector<char> diff_zero(trials, 0), sum_zero(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), exec, [&](std::size_t t) {
    Sampler rng(sub_seed(seed, t));
    Assignment a = random_assignment(syms, rng);
    Q vp = evaluate(p, a), vr = evaluate(r, a);
    diff_zero[t] = vp == vr;
    sum_zero[t] = vp == -vr;
  });
  bool eq = std::all_of(diff_zero.begin(), diff_zero.end(), [](char c) { return c != 0; });
  bool neg = std::all_of(sum_zero.begin(), sum_zero.end(), [](char c) { return c != 0; });
  return eq || (up_to_sign && neg);
}

// --- vector expressions ---------------------------------------------------------------

VectorExpr vec_symbol(int s) { return VectorExpr{{s, BracketPoly::constant(Q(1))}}; }

BracketPoly bracket3(const VectorExpr& a, const VectorExpr& b, const VectorExpr& c) {
  BracketPoly out;
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b)
      for (const auto& [sc, cc] : c) {
        BracketPoly br = BracketPoly::bracket(sa, sb, sc);
        if (br.is_zero()) continue;
        out = out + ca * cb * cc * br;
      }
  return out;
}

namespace {

void accumulate(VectorExpr& v, int s, const BracketPoly& c) {
  if (c.is_zero()) return;
  auto it = v.find(s);
  if (it == v.end()) {
    v.emplace(s, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) v.erase(it);
  }
}

}  // namespace

VectorExpr meet(const VectorExpr& a, const VectorExpr& b, const VectorExpr& c, const VectorExpr& d) {
  BracketPoly abc = bracket3(a, b, c), abd = bracket3(a, b, d);
  VectorExpr out;
  for (const auto& [s, k] : d) accumulate(out, s, abc * k);
  for (const auto& [s, k] : c) accumulate(out, s, -(abd * k));
  return out;
}

VectorExpr meet22(int a, int b, int c, int d) { return meet(vec_symbol(a), vec_symbol(b), vec_symbol(c), vec_symbol(d)); }

Vec3 evaluate(const VectorExpr& v, const Assignment& asg) {
  Vec3 out = zero_vec();
  for (const auto& [s, c] : v) out = out + evaluate(c, asg) * lookup(asg, s);
  return out;
}

// --- Grassmann-Cayley expressions --------------------------------------------------------

namespace {

class GCParser {
 public:
  explicit GCParser(const std::string& s) : text_(s) {}

  GCExpr parse() {
    GCExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("Grassmann-Cayley parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(const std::string& tok) {
    skip();
    return text_.compare(pos_, tok.size(), tok) == 0;
  }
  bool eat(const std::string& tok) {
    if (!at(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  bool meet_op() { return eat("\xE2\x88\xA7") || eat("^"); }
  bool join_op() { return eat("\xE2\x88\xA8") || eat("v"); }
  bool atom_start() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '{';
  }

  GCExpr expr() {
    GCExpr left = join();
    if (meet_op()) {
      GCExpr right = join();
      GCExpr e;
      e.kind = GCExpr::Kind::Meet;
      e.kids = {left, right};
      return e;
    }
    return left;
  }

  GCExpr join() {
    std::vector<GCExpr> parts{atom()};
    for (;;) {
      bool explicit_op = join_op();
      if (!atom_start()) {
        if (explicit_op) fail("expected an operand after join");
        break;
      }
      parts.push_back(atom());
    }
    if (parts.size() == 1) return parts[0];
    GCExpr e;
    e.kind = GCExpr::Kind::Join;
    e.kids = parts;
    return e;
  }

  GCExpr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GCExpr e = expr();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    GCExpr leaf;
    if (c == '{') {
      ++pos_;
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
      if (digits.empty() || !eat("}")) fail("expected {number}");
      leaf.symbol = std::stoi(digits);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      leaf.symbol = c - '0';
      ++pos_;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (leaf.symbol < 1) fail("points are 1-based");
    return leaf;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

// An extensor: a join of vectors (step 1 or 2) or a scalar (step 3).
struct Extensor {
  std::vector<VectorExpr> vecs;
  bool scalar = false;
  BracketPoly value;
};

Extensor expand_ext(const GCExpr& e) {
  switch (e.kind) {
    case GCExpr::Kind::Leaf:
      return Extensor{{vec_symbol(e.symbol)}, false, {}};
    case GCExpr::Kind::Join: {
      Extensor acc;
      for (const auto& k : e.kids) {
        Extensor x = expand_ext(k);
        if (x.scalar || acc.scalar) throw std::invalid_argument("join with a scalar is not defined here");
        acc.vecs.insert(acc.vecs.end(), x.vecs.begin(), x.vecs.end());
        if (acc.vecs.size() > 3) throw std::invalid_argument("join of more than three vectors in rank three");
        if (acc.vecs.size() == 3) {
          acc.scalar = true;
          acc.value = bracket3(acc.vecs[0], acc.vecs[1], acc.vecs[2]);
          acc.vecs.clear();
        }
      }
      return acc;
    }
    case GCExpr::Kind::Meet: {
      Extensor a = expand_ext(e.kids.at(0)), b = expand_ext(e.kids.at(1));
      if (a.scalar || b.scalar || a.vecs.size() != 2 || b.vecs.size() != 2)
        throw std::invalid_argument("meet is applied to two 2-extensors only");
      return Extensor{{meet(a.vecs[0], a.vecs[1], b.vecs[0], b.vecs[1])}, false, {}};
    }
  }
  throw std::invalid_argument("malformed expression");
}

}  // namespace

GCExpr parse_gc(const std::string& text) { return GCParser(text).parse(); }

std::string gc_text(const GCExpr& e) {
  switch (e.kind) {
    case GCExpr::Kind::Leaf:
      return e.symbol < 10 ? std::to_string(e.symbol) : "{" + std::to_string(e.symbol) + "}";
    case GCExpr::Kind::Join: {
      std::string out;
      for (std::size_t i = 0; i < e.kids.size(); ++i) {
        const auto& k = e.kids[i];
        bool leaf = k.kind == GCExpr::Kind::Leaf;
        bool prev_leaf = i > 0 && e.kids[i - 1].kind == GCExpr::Kind::Leaf;
        if (i > 0 && !(leaf && prev_leaf)) out += "v";
        out += leaf ? gc_text(k) : "(" + gc_text(k) + ")";
      }
      return out;
    }
    case GCExpr::Kind::Meet:
      return gc_text(e.kids[0]) + "^" + gc_text(e.kids[1]);
  }
  return "";
}

BracketPoly expand_gc(const GCExpr& e) {
  Extensor x = expand_ext(e);
  if (!x.scalar) throw std::invalid_argument("expression does not reduce to a scalar");
  return x.value;
}

BracketPoly expand_gc(const std::string& text) { return expand_gc(parse_gc(text)); }

// --- generators -------------------------------------------------------------------

std::string to_text(const CircuitGenerator& g) {
  switch (g.kind) {
    case CircuitGenerator::Kind::Bracket:
      return to_text(g.poly);
    case CircuitGenerator::Kind::Minor:
      return "minor(" + std::to_string(g.points[0]) + "," + std::to_string(g.points[1]) + ";" +
             std::to_string(g.row_a) + "," + std::to_string(g.row_b) + ")";
    case CircuitGenerator::Kind::Entry:
      return "coord(" + std::to_string(g.points[0]) + ";" + std::to_string(g.row_a) + ")";
  }
  return "";
}

Q evaluate(const CircuitGenerator& g, const VectorConfig& cfg) {
  switch (g.kind) {
    case CircuitGenerator::Kind::Bracket:
      return evaluate(g.poly, assignment_from(cfg));
    case CircuitGenerator::Kind::Minor: {
      const Vec3& u = cfg[g.points[0]];
      const Vec3& v = cfg[g.points[1]];
      int a = g.row_a - 1, b = g.row_b - 1;
      return u[a] * v[b] - u[b] * v[a];
    }
    case CircuitGenerator::Kind::Entry:
      return cfg[g.points[0]][g.row_a - 1];
  }
  return Q(0);
}

std::vector<CircuitGenerator> circuit_generators(const Matroid& m) {
  std::vector<CircuitGenerator> out;
  for (int p : m.loops())
    for (int r = 1; r <= 3; ++r) out.push_back({CircuitGenerator::Kind::Entry, {p}, r, 0, {}});
  for (const auto& c : m.classes())
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
          out.push_back({CircuitGenerator::Kind::Minor, {c[i], c[j]}, a, b, {}});
  for (const auto& t : three_circuits(m))
    out.push_back({CircuitGenerator::Kind::Bracket, t, 0, 0, BracketPoly::bracket(t[0], t[1], t[2])});
  return out;
}

BracketPoly substitute_point(const BracketPoly& p, int x, const std::array<int, 2>& pair1,
                             const std::array<int, 2>& pair2, bool* changed) {
  VectorExpr rep = meet22(pair1[0], pair1[1], pair2[0], pair2[1]);
  bool hit = false;
  BracketPoly out;
  for (const auto& [mono, c] : p.terms()) {
    BracketPoly term = BracketPoly::constant(c);
    for (const auto& b : mono) {
      if (b[0] != x && b[1] != x && b[2] != x) {
        term = term * BracketPoly::bracket(b[0], b[1], b[2]);
        continue;
      }
      hit = true;
      VectorExpr slots[3];
      for (int i = 0; i < 3; ++i) slots[i] = b[i] == x ? rep : vec_symbol(b[i]);
      term = term * bracket3(slots[0], slots[1], slots[2]);
    }
    out = out + term;
  }
  if (changed) *changed = hit;
  return hit ? out : p;
}

namespace {

std::array<int, 2> two_smallest_except(const PointSet& line, int x) {
  std::array<int, 2> out{0, 0};
  int k = 0;
  for (int p : line) {
    if (p == x) continue;
    out[k++] = p;
    if (k == 2) break;
  }
  return out;
}

}  // namespace

std::vector<BracketPoly> gc_generators(const Matroid& m, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  std::vector<BracketPoly> out;
  std::set<BracketPoly> seen;
  auto add = [&](const BracketPoly& p) {
    if (p.is_zero()) return false;
    BracketPoly key = p.sign_normalized();
    if (!seen.insert(key).second) return false;
    out.push_back(p);
    return true;
  };
  const int d = m.ground_size();
  for (int x = 1; x <= d; ++x) {
    if (m.rep(x) != x) continue;
    auto ls = lines_through(m, x);
    if (ls.size() < 3) continue;
    for (std::size_t a = 0; a < ls.size(); ++a)
      for (std::size_t b = a + 1; b < ls.size(); ++b)
        for (std::size_t c = b + 1; c < ls.size(); ++c) {
          auto p12 = two_smallest_except(ls[a], x);
          auto p34 = two_smallest_except(ls[b], x);
          auto p56 = two_smallest_except(ls[c], x);
          VectorExpr v = meet22(p12[0], p12[1], p34[0], p34[1]);
          add(bracket3(v, vec_symbol(p56[0]), vec_symbol(p56[1])));
        }
  }
  std::size_t frontier_begin = 0;
  for (int level = 2; level <= depth; ++level) {
    std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      BracketPoly base = out[i];
      for (int x : base.symbols()) {
        if (!is_point_symbol(x) || x > d) continue;
        auto ls = lines_through(m, x);
        if (ls.size() != 2 || ls[0].size() < 3 || ls[1].size() < 3) continue;
        bool changed = false;
        BracketPoly s = substitute_point(base, x, two_smallest_except(ls[0], x), two_smallest_except(ls[1], x), &changed);
        if (changed) add(s);
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

const std::vector<CuratedGC>& curated_recipe(const std::string& name) {
  static const std::vector<CuratedGC> pascal = {
      {"(15^24)v(16^34)v(35^26)", "[1,5,3][1,4,2][5,4,6][3,2,6]-[1,5,4][1,3,2][5,3,6][4,2,6]"},
      {"7v(53^26)v(34^61)", "[5,2,6][3,6,1][7,3,4]-[3,2,6][3,6,1][7,5,4]+[3,2,6][4,6,1][7,5,3]"},
      {"8v(51^24)v(35^62)", ""},
      {"9v(43^16)v(24^51)", ""},
      {"7v9v(34^61)", "[7,4,9][3,6,1]-[4,6,1][7,3,9]"},
      {"7v8v(35^62)", ""},
      {"9v8v(15^42)", ""},
  };
  static const std::vector<CuratedGC> pappus = {
      {"(23^57)v68", "[2,3,5][7,6,8]-[2,3,7][5,6,8]"}, {"(13^47)v69", "[1,3,4][7,6,9]-[1,3,7][4,6,9]"},
      {"(12^48)v59", "[1,2,4][8,5,9]-[1,2,8][4,5,9]"}, {"(24^15)v89", "[2,4,1][5,8,9]-[2,4,5][1,8,9]"},
      {"(79^16)v34", "[7,9,1][6,3,4]-[7,9,6][1,3,4]"}, {"(26^35)v78", "[2,6,3][5,7,8]-[2,6,5][3,7,8]"},
      {"(27^38)v56", "[2,7,3][8,5,6]-[2,7,8][3,5,6]"}, {"(46^17)v39", "[4,6,1][7,3,9]-[4,6,7][1,3,9]"},
      {"(29^18)v45", "[2,9,1][8,4,5]-[2,9,8][1,4,5]"},
  };
  if (name == "pascal-7" || name == "pascal") return pascal;
  if (name == "pappus-9" || name == "pappus") return pappus;
  throw std::invalid_argument("unknown curated recipe: " + name);
}

}  // namespace mvt
