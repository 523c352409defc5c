// Rank-at-most-three matroids stored as loops, parallel classes and lines on
// class representatives, together with the purely combinatorial queries and
// constructions used throughout the library.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvt {

// Sorted ascending list of 1-based point labels.
using PointSet = std::vector<int>;

class Matroid {
 public:
  Matroid();  // empty matroid on zero points

  // Strict constructor: lines are given on points (any member of a class
  // stands for the class), must avoid loops, span at least three classes and
  // pairwise share at most one class. Points not mentioned in loops or
  // parallels are singleton classes. The rank cap is normalized downward when
  // the data forces a smaller rank (for example a line through every class).
  Matroid(int ground_size, PointSet loops, std::vector<PointSet> parallels,
          std::vector<PointSet> lines, int rank_cap = 3);

  // Lenient constructor used by derived constructions: loops are removed from
  // lines, lines left with fewer than three classes dissolve, and lines that
  // share two classes are merged until the incidence structure is a matroid.
  static Matroid closure(int ground_size, PointSet loops, std::vector<PointSet> parallels,
                         std::vector<PointSet> lines, int rank_cap = 3);

  int ground_size() const { return d_; }
  const PointSet& loops() const { return loops_; }
  // Non-loop parallel classes (singletons included), ordered by representative.
  const std::vector<PointSet>& classes() const { return classes_; }
  // Only the classes with at least two members.
  std::vector<PointSet> parallel_classes() const;
  // Lines as sorted lists of class representatives.
  const std::vector<PointSet>& lines() const { return lines_; }
  int rank_cap() const { return cap_; }

  bool is_loop(int p) const;
  int rep(int p) const;  // smallest member of p's class, 0 for loops
  int class_index(int p) const;  // index into classes(), -1 for loops
  bool is_simple() const;
  int num_classes() const { return static_cast<int>(classes_.size()); }

  // Lines including the implicit line of a rank-two matroid.
  std::vector<PointSet> effective_lines() const;

  bool operator==(const Matroid& o) const;
  bool operator!=(const Matroid& o) const { return !(*this == o); }
  bool operator<(const Matroid& o) const;

 private:
  void build(int d, PointSet loops, std::vector<PointSet> parallels,
             std::vector<PointSet> lines, int cap, bool lenient);

  int d_ = 0;
  PointSet loops_;
  std::vector<PointSet> classes_;
  std::vector<PointSet> lines_;
  int cap_ = 0;
  std::vector<int> cls_;  // point -> class index or -1
};

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- rank and circuits ------------------------------------------------------

int rank(const Matroid& m, const PointSet& s);
bool is_dependent(const Matroid& m, const PointSet& s);
std::vector<PointSet> circuits_upto(const Matroid& m, int k);
// All circuits of size three (triples of distinct collinear classes).
std::vector<PointSet> three_circuits(const Matroid& m);

// --- constructions ------------------------------------------------------------

Matroid restrict_to(const Matroid& m, const PointSet& s);  // reindexes to 1..|s|
Matroid delete_points(const Matroid& m, const PointSet& s);
Matroid set_loops(const Matroid& m, const PointSet& s);
Matroid uniform(int rank, int d);
Matroid identify_points(const Matroid& m, int p, int q);
Matroid identify_set(const Matroid& m, const PointSet& s);
// Adds the circuit {a,b,c} and closes under the forced line merges.
Matroid add_circuit(const Matroid& m, const PointSet& triple);
Matroid pi_config(const Matroid& m, int i);

struct Reduced {
  Matroid simple;           // on the class representatives, reindexed 1..k
  std::vector<int> labels;  // labels[j-1] = original representative of new point j
  PointSet loops;
  std::vector<PointSet> parallels;
};
Reduced reduce(const Matroid& m);

// --- incidence queries --------------------------------------------------------

std::vector<PointSet> lines_through(const Matroid& m, int p);
int degree(const Matroid& m, int p);
PointSet s_points(const Matroid& m);  // degree >= 2
PointSet q_points(const Matroid& m);  // degree >= 3
PointSet all_points(int d);
PointSet set_minus(const PointSet& a, const PointSet& b);

// --- chains ------------------------------------------------------------------

// Point sets S_0 = [d] ⊇ S_1 ⊇ ... of the nilpotency (min_degree = 2) or
// solvable (min_degree = 3) chain, computed on the original labels. The last
// entry is either empty or a fixpoint.
std::vector<PointSet> chain_levels(const Matroid& m, int min_degree);
std::vector<Matroid> nilpotency_chain(const Matroid& m);
bool is_nilpotent(const Matroid& m);
bool is_solvable(const Matroid& m);
std::optional<int> nilpotency_length(const Matroid& m);
// Restriction of m to s keeping the original labels' line structure:
// lines restricted to s that still have three classes.
std::vector<PointSet> lines_within(const Matroid& m, const PointSet& s);

struct Ordering {
  std::vector<int> order;  // p_1..p_d
  std::vector<int> w;      // degree of p_i in the restriction to p_1..p_i
  int zero_count() const;
};
std::optional<Ordering> nilpotent_ordering(const Matroid& m);
Ordering ordering_degrees(const Matroid& m, const std::vector<int>& order);

// --- order and isomorphism ----------------------------------------------------

bool dependency_leq(const Matroid& n1, const Matroid& n2);
bool dependency_lt(const Matroid& n1, const Matroid& n2);

// perm[p] = image of p (index 0 unused).
Matroid relabel(const Matroid& m, const std::vector<int>& perm);
std::vector<std::vector<int>> automorphisms(const Matroid& m);
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);
bool are_isomorphic(const Matroid& a, const Matroid& b);
// Relabeling-invariant certificate: equal iff the matroids are isomorphic.
std::string canonical_form(const Matroid& m);

std::string describe(const Matroid& m);  // compact one-line text

}  // namespace mvt
