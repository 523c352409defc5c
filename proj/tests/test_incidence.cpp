// Cycles, forests, cactus structure, associated graphs, free gluing and
// elementary perturbations.
#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "mvt/fixtures.hpp"
#include "mvt/incidence.hpp"

using namespace mvt;

namespace {

Matroid named(const std::string& n) { return load_config(n).matroid; }
Matroid line_of(int k) { return Matroid(k, {}, {}, {all_points(k)}); }

// Points of degree at least two on each line.
bool one_edge_per_line(const Matroid& m) {
  for (const auto& l : m.lines()) {
    int c = 0;
    for (int p : l) c += degree(m, p) >= 2;
    if (c > 2) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("incidence") {
  TEST_CASE("cycle of the quadrilateral set") {
    auto c = find_cycle(named("qs"));
    REQUIRE(c.has_value());
    PointSet pts = c->points;
    std::sort(pts.begin(), pts.end());
    CHECK(pts == PointSet{1, 2, 4, 5});
    std::set<PointSet> lines(c->lines.begin(), c->lines.end());
    CHECK(lines == std::set<PointSet>{{1, 2, 3}, {2, 4, 6}, {3, 4, 5}, {1, 5, 6}});
    CHECK(validate_cycle(named("qs"), *c));
  }

  TEST_CASE("cycle validation rejects broken witnesses") {
    CycleWitness w{{1, 2}, {{1, 2, 3}, {2, 4, 6}}};
    CHECK_FALSE(validate_cycle(named("qs"), w));
  }

  TEST_CASE("forests") {
    CHECK(is_forest(named("three-lines")));
    CHECK(is_forest(line_of(4)));
    CHECK(is_forest(named("forest-fig")));
    CHECK_FALSE(is_forest(named("cactus-fig")));
    CHECK_FALSE(is_forest(named("qs")));
  }

  TEST_CASE("ordering-based graph of three concurrent lines") {
    Graph g = ordering_graph(named("three-lines"), all_points(7));
    std::vector<std::pair<int, int>> want = {{1, 2}, {2, 7}, {3, 4}, {4, 7}, {5, 6}, {6, 7}};
    CHECK(g.edges == want);
    CHECK_FALSE(graph_has_cycle(g));
  }

  TEST_CASE("grid is not a cactus") {
    Matroid g = named("grid3");
    CactusReport r = cactus_report(g);
    CHECK_FALSE(r.cactus);
    CHECK(std::find(r.offending_lines.begin(), r.offending_lines.end(), PointSet{2, 5, 8}) != r.offending_lines.end());
    REQUIRE(r.witnesses.size() == 2);
    for (const auto& w : r.witnesses) {
      CHECK(validate_cycle(g, w));
      CHECK(std::find(w.lines.begin(), w.lines.end(), r.offending_lines.front()) != w.lines.end());
    }
    CHECK_THROWS_AS(cactus_components(g), NotCactusError);
    try {
      cactus_components(g);
    } catch (const NotCactusError& e) {
      CHECK_FALSE(e.report().offending_lines.empty());
    }
  }

  TEST_CASE("cactus fixtures and their components") {
    CHECK(is_cactus(named("cactus-fig")));
    CHECK(is_cactus(named("forest-fig")));
    Matroid triangle(6, {}, {}, {{1, 2, 4}, {2, 3, 5}, {1, 3, 6}});
    CHECK(is_cactus(triangle));
    auto comps = cactus_components(triangle);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].kind == CactusComponent::Kind::Cycle);

    auto cc = cactus_components(named("cactus-fig"));
    CHECK(cc.size() == 4);
    std::vector<PointSet> seen;
    for (const auto& c : cc) seen.insert(seen.end(), c.lines.begin(), c.lines.end());
    std::sort(seen.begin(), seen.end());
    CHECK(seen == named("cactus-fig").lines());  // a partition of the lines
    CHECK_FALSE(is_cactus(named("fano")));
  }

  TEST_CASE("associated graphs") {
    Graph t = associated_graph(named("three-lines"));
    CHECK(t.vertices == std::vector<int>{7});
    CHECK(t.edges.empty());
    Graph q = associated_graph(named("qs"));
    CHECK(q.vertices == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(q.edges.size() == 12);
    Graph e = associated_graph(Matroid());
    CHECK(e.vertices.empty());
    CHECK(e.edges.empty());
  }

  TEST_CASE("cactus property against the graph criterion on random configurations") {
    Sampler rng(1);
    int restricted = 0;
    for (int t = 0; t < 1000; ++t) {
      int d = static_cast<int>(rng.integer(3, 9));
      Matroid m = gen::random_simple(rng, d, static_cast<int>(rng.integer(1, 7)));
      bool cactus = is_cactus(m);
      bool graph = is_cactus_graph(associated_graph(m));
      // A cactus associated graph always comes from a cactus configuration.
      if (graph) CHECK(cactus);
      // When each line contributes a single edge the two notions coincide.
      if (one_edge_per_line(m)) {
        ++restricted;
        CHECK(cactus == graph);
      }
      CHECK(is_forest(m) == !find_cycle(m).has_value());
      if (is_forest(m)) CHECK(cactus);
      if (cactus) CHECK(is_nilpotent(m));
      if (auto c = find_cycle(m)) CHECK(validate_cycle(m, *c));
    }
    CHECK(restricted > 500);
  }

  TEST_CASE("a line with three vertices breaks the graph criterion") {
    // A four-cycle with a pendant line on one of its lines is a cactus, but
    // the cycle line spans a triangle sharing an edge with the square.
    Matroid m(11, {}, {}, {{1, 2, 3}, {1, 4, 5}, {2, 6, 7}, {4, 6, 8}, {3, 10, 11}});
    CHECK(is_cactus(m));
    CHECK_FALSE(is_cactus_graph(associated_graph(m)));
  }

  TEST_CASE("named fixtures: cactus implies nilpotent, forest implies cactus") {
    for (const auto& n : registry_keys()) {
      Matroid m = named(n);
      if (!m.is_simple()) continue;
      if (is_forest(m)) CHECK(is_cactus(m));
      if (is_cactus(m)) CHECK(is_nilpotent(m));
    }
  }

  TEST_CASE("free gluing of three lines and the quadrilateral set") {
    Matroid g = free_gluing(named("three-lines"), named("qs"), 3, 3);
    CHECK(g.ground_size() == 12);
    std::vector<PointSet> want = {{1, 2, 7}, {3, 4, 7}, {3, 8, 9}, {3, 10, 11}, {5, 6, 7}, {8, 11, 12}, {9, 10, 12}};
    CHECK(g.lines() == want);
  }

  TEST_CASE("two glued lines meet in one point") {
    Matroid g = free_gluing(line_of(3), line_of(3), 2, 1);
    CHECK(g.ground_size() == 5);
    CHECK(g.lines() == std::vector<PointSet>{{1, 2, 3}, {2, 4, 5}});
  }

  TEST_CASE("gluing sequences rebuild the figures") {
    Matroid triangle(6, {}, {}, {{1, 2, 4}, {2, 3, 5}, {1, 3, 6}});
    Matroid c = free_gluing(free_gluing(free_gluing(triangle, line_of(3), 1, 1), line_of(3), 2, 1), line_of(3), 3, 1);
    CHECK(c == named("cactus-fig"));

    // Lines {1,2,3}, {1,4,5}, {2,6,7}, {3,8,9}; then two lines at 8 and one at 9.
    Matroid f = free_gluing(line_of(3), line_of(3), 1, 1);
    f = free_gluing(f, line_of(3), 2, 1);
    f = free_gluing(f, line_of(3), 3, 1);
    f = free_gluing(f, line_of(3), 8, 1);
    f = free_gluing(f, line_of(3), 8, 1);
    f = free_gluing(f, line_of(3), 9, 1);
    CHECK(f.ground_size() == 15);
    CHECK(are_isomorphic(f, named("forest-fig")));
  }

  TEST_CASE("free gluing is symmetric up to relabeling") {
    Sampler rng(2);
    for (int t = 0; t < 40; ++t) {
      Matroid a = gen::random_simple(rng, static_cast<int>(rng.integer(3, 6)), 3);
      Matroid b = gen::random_simple(rng, static_cast<int>(rng.integer(3, 6)), 3);
      int p = static_cast<int>(rng.integer(1, a.ground_size()));
      int q = static_cast<int>(rng.integer(1, b.ground_size()));
      Matroid ab = free_gluing(a, b, p, q), ba = free_gluing(b, a, q, p);
      CHECK(ab.ground_size() == a.ground_size() + b.ground_size() - 1);
      CHECK(ab.effective_lines().size() == a.effective_lines().size() + b.effective_lines().size());
      CHECK(are_isomorphic(ab, ba));
    }
  }

  TEST_CASE("loop components of cactus configurations") {
    auto cf = cactus_loop_components(named("cactus-fig"));
    REQUIRE(cf.size() == 8);
    CHECK(cf[0] == named("cactus-fig"));
    CHECK(cf[1] == set_loops(named("cactus-fig"), {1}));
    CHECK(cf[7] == set_loops(named("cactus-fig"), {1, 2, 3}));
    auto tl = cactus_loop_components(named("three-lines"));
    REQUIRE(tl.size() == 2);
    CHECK(tl[1] == set_loops(named("three-lines"), {7}));
    CHECK(cactus_loop_components(line_of(3)).size() == 1);
  }

  TEST_CASE("elementary perturbations") {
    Matroid shorter = elementary_perturbation(line_of(4), {1, 2, 3, 4}, 4);
    CHECK(shorter.lines() == std::vector<PointSet>{{1, 2, 3}});
    Matroid p = named("pascal");
    Matroid q = elementary_perturbation(p, {7, 8, 9}, 9);
    CHECK(q.lines().size() == 6);
    CHECK_FALSE(is_dependent(q, {7, 8, 9}));
    CHECK_THROWS_AS(elementary_perturbation(p, {7, 8, 9}, 1), std::invalid_argument);
  }

  TEST_CASE("perturbations reach a solvable configuration") {
    Matroid m = named("pappus");
    auto steps = perturb_to_solvable(m, 4);
    REQUIRE(steps.has_value());
    CHECK_FALSE(steps->empty());
    for (const auto& s : *steps) m = elementary_perturbation(m, s.line, s.point);
    CHECK(is_solvable(m));
    auto none = perturb_to_solvable(named("qs"), 3);
    REQUIRE(none.has_value());
    CHECK(none->empty());
  }
}
