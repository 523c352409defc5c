// Dependency-order search for minimal matroids by branching saturation,
// decomposition registries, cover checks and irredundancy witnesses.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mvt/matroid.hpp"
#include "mvt/parallel.hpp"
#include "mvt/rational.hpp"
#include "mvt/vector_config.hpp"

namespace mvt {

// --- dependency masks -----------------------------------------------------------

// Bit set over the subsets of [12] of size one to three. A rank-at-most-three
// matroid is determined by its dependent sets of these sizes, and the
// dependency order is inclusion of masks.
struct DepMask {
  std::array<std::uint64_t, 5> w{};
  void set(int bit) { w[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  bool test(int bit) const { return (w[bit >> 6] >> (bit & 63)) & 1; }
  bool subset_of(const DepMask& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  bool operator==(const DepMask& o) const { return w == o.w; }
  bool operator!=(const DepMask& o) const { return w != o.w; }
  bool operator<(const DepMask& o) const { return w < o.w; }
};
constexpr int kMaskMaxPoints = 12;
int subset_bit(int a);
int subset_bit(int a, int b);
int subset_bit(int a, int b, int c);
DepMask dependency_mask(const Matroid& m);

// --- minimal matroids -------------------------------------------------------------

struct DependencyDelta {
  enum class Kind { Circuit, Parallel, Loop };
  Kind kind = Kind::Loop;
  PointSet points;  // 3, 2 or 1 points
};
std::string to_string(const DependencyDelta& d);
// Elementary deltas that are independent in m, loops first, then parallel
// pairs, then new circuits, each lexicographically.
std::vector<DependencyDelta> elementary_deltas(const Matroid& m);

struct SearchLimits {
  int max_ground = 9;
  long max_states = 1000000;
};

// ≤-minimal fixpoints of branching saturation started from m plus the delta.
// Throws std::invalid_argument when the delta is already dependent in m.
std::vector<Matroid> apply_delta_saturate(const Matroid& m, const DependencyDelta& delta,
                                          const SearchLimits& limits = {});
// min{N : N > m}, as a sorted antichain of labeled matroids. Throws
// GuardError when the ground set or the state count exceeds the limits.
std::vector<Matroid> minimal_matroids(const Matroid& m, Exec exec = Exec::Parallel,
                                      const SearchLimits& limits = {});

// What n adds to base: new loops, new parallel classes and new lines, e.g.
// "loops {1}", "parallel {7,8,9}", "line {3,6,8}", joined by "; ".
std::string delta_summary(const Matroid& base, const Matroid& n);
// Class names of the minimal matroids over the third 9_3 configuration
// (A_1..A_6, B, C_1, C_2, pi^i, D, M(i)); empty when n is not one of them.
std::string third93_minimal_label(const Matroid& n);

// --- registries -------------------------------------------------------------------

struct RegistryComponent {
  std::string label;  // "M", "U_{2,9}", "M(7)", "A_1", ...
  Matroid matroid;
};

struct DecompositionRegistry {
  std::string name;
  Matroid base;
  std::vector<RegistryComponent> components;  // as listed for the decomposition
  std::string source;
  int expected_count = 0;
};

// "pascal", "pappus-m9", "third93", and any cactus configuration loadable by
// name or path (components M(J) for J ⊆ Q_M).
std::vector<std::string> registry_names();
DecompositionRegistry registry(const std::string& name);

struct CoverReport {
  bool above_base = true;       // every component ≥ base
  bool realizations_ok = true;  // propagated realizations include the base dependencies
  bool count_ok = true;         // component count matches the listed count
  int realized = 0;             // components with a propagated realization
  int distinct = 0;             // distinct labeled matroids among the components
  std::vector<std::string> problems;
  bool ok() const { return above_base && realizations_ok && count_ok; }
};
CoverReport cover_sanity(const DecompositionRegistry& reg, std::uint64_t seed = 0);

// --- irredundancy witnesses -----------------------------------------------------

using PointPair = std::array<int, 2>;
struct LinePairMeet {
  PointPair first;   // the meet of the lines first and second
  PointPair second;
};

struct NonConcurrencyWitness {
  VectorConfig cfg;
  int point = 0;          // the loop whose lines fail to be concurrent
  LinePairMeet meet_a;
  LinePairMeet meet_b;
};

Vec3 witness_meet(const VectorConfig& cfg, const LinePairMeet& lp);
// Both meets nonzero and not projectively equal, with the four point pairs
// spanning lines of base through the witness point.
bool witness_check(const NonConcurrencyWitness& w, const Matroid& base);

struct NamedWitness {
  std::string name;
  Matroid base;
  Matroid loop_variant;  // the component the configuration realizes
  std::vector<NonConcurrencyWitness> witnesses;
  std::vector<std::array<Vec3, 2>> printed;  // printed meets per witness
};
// "pascal-M7", "third93-M1", "third93-M3", "third93-M1,4".
std::vector<std::string> witness_names();
NamedWitness named_witness(const std::string& name);
// Name for `witness --config C --loop P[,P...]`.
std::string witness_name_for(const std::string& config, const PointSet& loops);

}  // namespace mvt
