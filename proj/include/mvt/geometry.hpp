// Exact rational geometry of vector configurations: meets, circuit-variety
// and realization membership, frame normalization and constructive
// realization by propagation along an ordering of the points.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mvt/bracket.hpp"
#include "mvt/linalg.hpp"
#include "mvt/matroid.hpp"
#include "mvt/rational.hpp"
#include "mvt/vector_config.hpp"

namespace mvt {

// v1v2 ∧ v3v4 = [v1,v2,v3] v4 - [v1,v2,v4] v3; zero iff the two spans do not
// jointly span a point.
Vec3 meet_vectors(const Vec3& v1, const Vec3& v2, const Vec3& v3, const Vec3& v4);

int rank_of(const std::vector<Vec3>& vs);
int rank_of(const VectorConfig& cfg, const PointSet& s);

// Every dependent set of m (loops, parallel pairs, collinear triples) is
// dependent in cfg.
bool includes_dependencies(const VectorConfig& cfg, const Matroid& m);
// The dependent sets of cfg are exactly those of m.
bool is_realization(const VectorConfig& cfg, const Matroid& m);

struct FrameNormalization {
  QMatrix transform;        // 3x3, applied on the left
  std::vector<Q> scalings;  // per point 0..d (index 0 unused)
  VectorConfig cfg;         // scalings[p] * transform * cfg[p]
};
// Maps the four points to e1, e2, e3, (1,1,1). Throws std::invalid_argument
// when some triple of them is dependent.
FrameNormalization normalize_frame(const VectorConfig& cfg, const std::array<int, 4>& basis);

struct RealizationCertificate {
  enum class Outcome { Realization, Infeasible, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  VectorConfig cfg;                // the realization, or the partial forced configuration
  Q witness = 0;                   // infeasible: nonzero forced determinant
  int stuck_point = 0;             // point at which the construction failed
  std::vector<int> order;          // construction order used
  std::vector<std::string> trace;  // one line per placed point
};
std::string outcome_name(RealizationCertificate::Outcome o);

// Order used by propagate_realization: the nilpotent ordering when one
// exists, else the solvable chain from the innermost level outward, else the
// fixpoint core of the nilpotency chain followed by the outer levels.
std::vector<int> propagation_order(const Matroid& simple);

// Places the points one by one: a point on no determined line is free (the
// first four such points form the standard frame), on one determined line it
// is a random point of that line, on two it is their meet, and on three or
// more the lines must be concurrent. Randomized attempts use sub-seeds of
// `seed`; a conflict that involves no free choice is reported as infeasible.
RealizationCertificate propagate_realization(const Matroid& m, std::uint64_t seed, int attempts = 32);

// Geometric evaluation of a Grassmann-Cayley expression (meets via
// meet_vectors, joins of three vectors via det3).
Q evaluate_gc_geometric(const GCExpr& e, const Assignment& asg);

}  // namespace mvt
