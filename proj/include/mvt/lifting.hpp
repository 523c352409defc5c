// Liftability matrices over the bracket ring, their exact evaluation and
// kernels, the closed-form lifting dimension and lifting-generator counts.
#pragma once

#include <string>
#include <vector>

#include "mvt/bracket.hpp"
#include "mvt/linalg.hpp"
#include "mvt/matroid.hpp"
#include "mvt/parallel.hpp"
#include "mvt/vector_config.hpp"

namespace mvt {

enum class QMode { Single, PerColumn };
QMode parse_qmode(const std::string& s);  // "single" | "per-column"

struct LiftMatrix {
  std::vector<PointSet> rows;  // 3-circuits
  std::vector<int> cols;       // point labels
  std::vector<std::vector<BracketPoly>> entries;
  QMode mode = QMode::Single;
};

// 3-circuits ordered by the given line order (each line contributing its
// triples in lexicographic order); falls back to sorted circuits.
std::vector<PointSet> lift_rows(const Matroid& m, const std::vector<PointSet>& line_order = {});
// Row {c1<c2<c3}: [c2,c3,q] at c1, -[c1,c3,q] at c2, [c1,c2,q] at c3. In
// per-column mode the q of column p is q_p.
LiftMatrix lift_matrix_on(const std::vector<PointSet>& rows, const std::vector<int>& cols, QMode mode);
LiftMatrix lift_matrix(const Matroid& m, QMode mode, const std::vector<PointSet>& line_order = {});

std::string entry_text(const BracketPoly& p);  // "0", "[1,2,q]", "-[1,3,q_2]"
std::string matrix_text(const LiftMatrix& lm);  // one row per line, entries joined by " & "

// qvecs: one vector in single mode, one per column in per-column mode.
QMatrix evaluate_lift_matrix(const LiftMatrix& lm, const VectorConfig& cfg, const std::vector<Vec3>& qvecs);

struct LiftSpace {
  std::vector<std::vector<Q>> basis;  // vectors indexed by column position (points 1..d)
  int dim = 0;
};
LiftSpace lift_space(const Matroid& m, const VectorConfig& cfg, const Vec3& q);
int lift_dim(const Matroid& m, const VectorConfig& cfg, const Vec3& q);

// dim(M|S_M) + sum over lines of (2 - rk(l ∩ S_M)) + #{p : L_p = ∅}, for
// simple nilpotent matroids.
int dim_recursive(const Matroid& m);
// Number of zeros in the degree sequence of the nilpotent ordering.
int dim_ordering(const Matroid& m);
// Both computations; throws std::invalid_argument for non-nilpotent or
// non-simple input and std::logic_error if they disagree.
int dim_formula(const Matroid& m);

// Points (1, t_i, 0) with pairwise distinct random t_i.
VectorConfig generic_collinear_config(int d, Sampler& rng);
// A random q off the plane z = 0.
Vec3 generic_q(Sampler& rng);
// Kernel dimensions over `draws` seeded (configuration, q) pairs.
std::vector<int> kernel_dim_draws(const Matroid& m, int draws, std::uint64_t seed, Exec exec = Exec::Parallel);

// includes_dependencies of {γ_i + z_i q} with respect to m.
bool lift_and_check(const Matroid& m, const VectorConfig& cfg, const Vec3& q, const std::vector<Q>& z);
bool in_kernel(const Matroid& m, const VectorConfig& cfg, const Vec3& q, const std::vector<Q>& z);

struct GeneratorCountItem {
  std::string label;
  int rows = 0;
  int cols = 0;
  int minor = 0;
  int alphabet = 3;
  long multiplicity = 1;
};
// Sum of multiplicity * C(cols, minor) * alphabet^cols.
Z lifting_generator_count(const std::vector<GeneratorCountItem>& spec);
std::vector<GeneratorCountItem> generator_count_spec(const std::string& name);
bool has_generator_count_spec(const std::string& name);

// "pascal": the 7x9 per-column matrix; "pappus": the 9x9 matrix followed
// by the 6x8 matrices omitting each index 1..9.
std::vector<LiftMatrix> lifting_generator_matrices(const std::string& name);

}  // namespace mvt
