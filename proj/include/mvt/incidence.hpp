// Cycle, forest and cactus structure of point-line configurations, free
// gluing, associated graphs and elementary perturbations.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mvt/matroid.hpp"

namespace mvt {

// Points p_1..p_n and lines l_1..l_n with p_i on l_i and l_{i+1} (cyclically).
struct CycleWitness {
  std::vector<int> points;
  std::vector<PointSet> lines;
};

bool validate_cycle(const Matroid& m, const CycleWitness& c);
std::optional<CycleWitness> find_cycle(const Matroid& m);
bool is_forest(const Matroid& m);

struct CactusComponent {
  enum class Kind { Line, Cycle };
  Kind kind;
  std::vector<PointSet> lines;
};

struct CactusReport {
  bool cactus = true;
  std::vector<PointSet> offending_lines;  // lines lying in two or more cycles
  std::vector<CycleWitness> witnesses;    // two distinct cycles through the first offender
};

class NotCactusError : public std::runtime_error {
 public:
  NotCactusError(const std::string& what, CactusReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const CactusReport& report() const { return report_; }

 private:
  CactusReport report_;
};

CactusReport cactus_report(const Matroid& m);
bool is_cactus(const Matroid& m);
// Throws NotCactusError when some line lies in two cycles.
std::vector<CactusComponent> cactus_components(const Matroid& m);

struct Graph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
};

// Vertices: points of degree >= 2; edges: pairs of such points on a common line.
Graph associated_graph(const Matroid& m);
// Ordering-based variant: on each line, consecutive points under `order`
// (a permutation of 1..d) are joined.
Graph ordering_graph(const Matroid& m, const std::vector<int>& order);
// Every edge lies on at most one simple cycle.
bool is_cactus_graph(const Graph& g);
bool graph_has_cycle(const Graph& g);

// Glues q of n onto p of m. Points of m keep their labels; the other points
// of n become d_m+1, d_m+2, ... in increasing order.
Matroid free_gluing(const Matroid& m, const Matroid& n, int p, int q);

// {M(J) : J ⊆ Q_M}, by subset size then lexicographically.
std::vector<Matroid> cactus_loop_components(const Matroid& m);

Matroid elementary_perturbation(const Matroid& m, const PointSet& line, int p);

struct PerturbationStep {
  PointSet line;
  int point;
};
// Breadth-first search for the shortest sequence of elementary
// perturbations reaching a solvable configuration.
std::optional<std::vector<PerturbationStep>> perturb_to_solvable(const Matroid& m, int max_steps);

}  // namespace mvt
