// Formal bracket polynomials over symbolic 3-vectors, Grassmann-Cayley
// meet/join expansion, and emission of circuit and Grassmann-Cayley
// generators for a configuration.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvt/matroid.hpp"
#include "mvt/parallel.hpp"
#include "mvt/rational.hpp"
#include "mvt/vector_config.hpp"

namespace mvt {

// --- symbols ----------------------------------------------------------------------
// Points are 1..999. Auxiliary symbols sort after every point: q, then q_i,
// then the standard basis vectors e_1, e_2, e_3.
constexpr int kSymQ = 1000;
constexpr int kSymE = 3000;
inline int sym_q(int i = 0) { return kSymQ + i; }  // i = 0 is the bare q
inline int sym_e(int i) { return kSymE + i; }
inline bool is_point_symbol(int s) { return s >= 1 && s < kSymQ; }
inline bool is_basis_symbol(int s) { return s > kSymE && s <= kSymE + 3; }
std::string symbol_text(int s);

using Bracket = std::array<int, 3>;     // strictly increasing symbols
using Monomial = std::vector<Bracket>;  // sorted multiset of brackets

struct SignedBracket {
  int sign;  // 0 when a symbol repeats
  Bracket bracket;
};
SignedBracket normalize_bracket(int a, int b, int c);

class BracketPoly {
 public:
  BracketPoly() = default;
  static BracketPoly constant(const Q& c);
  static BracketPoly bracket(int a, int b, int c);

  const std::map<Monomial, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<int> symbols() const;
  std::size_t size() const { return terms_.size(); }
  void add_term(const Monomial& m, const Q& c);

  BracketPoly operator+(const BracketPoly& o) const;
  BracketPoly operator-(const BracketPoly& o) const;
  BracketPoly operator-() const;
  BracketPoly operator*(const BracketPoly& o) const;
  BracketPoly scaled(const Q& c) const;
  bool operator==(const BracketPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BracketPoly& o) const { return terms_ != o.terms_; }
  bool operator<(const BracketPoly& o) const { return terms_ < o.terms_; }

  // Same polynomial with the sign chosen so that the first term is positive.
  BracketPoly sign_normalized() const;

 private:
  std::map<Monomial, Q> terms_;
};

// "+[1,2,3][4,5,6]-[1,2,4][3,5,6]"; "0" for the zero polynomial.
std::string to_text(const BracketPoly& p);
// Parses the text format. Brackets may also be written compactly with one
// character per point, e.g. "[68q_1]" or "[-13q_2]".
BracketPoly parse_poly(const std::string& text);

using Assignment = std::map<int, Vec3>;
Q evaluate(const BracketPoly& p, const Assignment& asg);
// Random vectors for every symbol; basis symbols get e_1, e_2, e_3.
Assignment random_assignment(const std::set<int>& symbols, Sampler& rng);
// Assignment of point symbols from a configuration.
Assignment assignment_from(const VectorConfig& cfg);

// Randomized identity test by exact evaluation at `trials` random points.
bool identity_test(const BracketPoly& p, const BracketPoly& r, int trials, std::uint64_t seed,
                   bool up_to_sign = false, Exec exec = Exec::Parallel);

// --- vector expressions and Grassmann-Cayley ------------------------------------------

using VectorExpr = std::map<int, BracketPoly>;  // symbol -> coefficient
VectorExpr vec_symbol(int s);
// [a,b,c] for vector expressions, expanded multilinearly.
BracketPoly bracket3(const VectorExpr& a, const VectorExpr& b, const VectorExpr& c);
// ab ∧ cd = [a,b,c] d - [a,b,d] c.
VectorExpr meet(const VectorExpr& a, const VectorExpr& b, const VectorExpr& c, const VectorExpr& d);
VectorExpr meet22(int a, int b, int c, int d);
Vec3 evaluate(const VectorExpr& v, const Assignment& asg);

struct GCExpr {
  enum class Kind { Leaf, Join, Meet };
  Kind kind = Kind::Leaf;
  int symbol = 0;
  std::vector<GCExpr> kids;
};

// Grammar: expr := join (('∧'|'^') join)? ; join := atom (('∨'|'v')? atom)* ;
// atom := digit | '{' number '}' | '(' expr ')'. Each digit is one point.
GCExpr parse_gc(const std::string& text);
std::string gc_text(const GCExpr& e);
// Multilinear expansion to a bracket polynomial; throws std::invalid_argument
// when the expression does not reduce to a scalar.
BracketPoly expand_gc(const GCExpr& e);
BracketPoly expand_gc(const std::string& text);

// --- generators --------------------------------------------------------------------

struct CircuitGenerator {
  enum class Kind { Bracket, Minor, Entry };
  Kind kind;
  PointSet points;      // the circuit
  int row_a = 0;        // Minor: rows (row_a,row_b); Entry: coordinate row_a
  int row_b = 0;
  BracketPoly poly;     // Bracket kind only
};
std::string to_text(const CircuitGenerator& g);
Q evaluate(const CircuitGenerator& g, const VectorConfig& cfg);
std::vector<CircuitGenerator> circuit_generators(const Matroid& m);

// Replaces x by p1p2 ∧ p3p4 = [p1,p2,p3]p4 - [p1,p2,p4]p3. `changed`, when
// given, reports whether x occurred in p.
BracketPoly substitute_point(const BracketPoly& p, int x, const std::array<int, 2>& pair1,
                             const std::array<int, 2>& pair2, bool* changed = nullptr);

std::vector<BracketPoly> gc_generators(const Matroid& m, int depth);

struct CuratedGC {
  std::string expression;  // Grassmann-Cayley expression
  std::string printed;     // printed polynomial, empty when only the expression is given
};
// Recipes "pascal-7" and "pappus-9".
const std::vector<CuratedGC>& curated_recipe(const std::string& name);

}  // namespace mvt
