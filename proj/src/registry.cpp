// Decomposition registries, cover checks and the irredundancy witnesses.
#include <algorithm>
#include <set>
#include <stdexcept>

#include "mvt/decomposition.hpp"
#include "mvt/fixtures.hpp"
#include "mvt/geometry.hpp"
#include "mvt/incidence.hpp"

namespace mvt {

namespace {

std::string loop_label(const PointSet& s) {
  std::string out = "M(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

// Points that share no line with p.
PointSet non_collinear(const Matroid& m, int p) {
  PointSet out;
  for (int q = 1; q <= m.ground_size(); ++q) {
    if (q == p) continue;
    bool shared = false;
    for (const auto& l : lines_through(m, p)) shared = shared || std::binary_search(l.begin(), l.end(), q);
    if (!shared) out.push_back(q);
  }
  return out;
}

DecompositionRegistry pascal_registry() {
  DecompositionRegistry r;
  r.name = "pascal";
  r.base = builtin_config("pascal").matroid;
  r.source = "Pascal configuration: M, U_{2,9} and M(i) for the three points of degree three";
  r.components = {{"M", r.base}, {"U_{2,9}", uniform(2, 9)}};
  for (int i : q_points(r.base)) r.components.push_back({loop_label({i}), set_loops(r.base, {i})});
  r.expected_count = 5;
  return r;
}

DecompositionRegistry pappus_m9_registry() {
  DecompositionRegistry r;
  r.name = "pappus-m9";
  Matroid pappus = builtin_config("pappus").matroid;
  r.base = set_loops(pappus, {9});
  r.source = "Pappus configuration with the loop 9";
  r.components = {{"M(9)", r.base},
                  {"U_{2,9}(9)", set_loops(uniform(2, 9), {9})},
                  {"M(1,9)", set_loops(pappus, {1, 9})},
                  {"M(4,9)", set_loops(pappus, {4, 9})},
                  {"M(1,4,9)", set_loops(pappus, {1, 4, 9})}};
  r.expected_count = 5;
  return r;
}

DecompositionRegistry third93_registry() {
  DecompositionRegistry r;
  r.name = "third93";
  const Matroid m = builtin_config("third93").matroid;
  r.base = m;
  r.source = "third 9_3 configuration: 46 listed components";
  r.components.push_back({"M", m});
  // A_1 identifies {7,8,9}; A_2..A_6 are its images under the automorphisms.
  Matroid a1 = identify_set(m, {7, 8, 9});
  std::set<Matroid> orbit;
  for (const auto& perm : automorphisms(m)) orbit.insert(relabel(a1, perm));
  std::vector<Matroid> as(orbit.begin(), orbit.end());
  std::stable_partition(as.begin(), as.end(), [&](const Matroid& x) { return x == a1; });
  for (std::size_t i = 0; i < as.size(); ++i) r.components.push_back({"A_" + std::to_string(i + 1), as[i]});
  r.components.push_back(
      {"B", Matroid::closure(9, {}, {{1, 2}, {4, 5}, {7, 9}}, m.effective_lines())});
  for (int i = 1; i <= 9; ++i) r.components.push_back({"pi^" + std::to_string(i), pi_config(m, i)});
  // M(i, k) for the two points k sharing no line with i; each unordered pair
  // is listed once from each end.
  for (int i = 1; i <= 9; ++i)
    for (int k : non_collinear(m, i)) {
      PointSet s{i, k};
      std::sort(s.begin(), s.end());
      r.components.push_back({"M(" + std::to_string(i) + "," + std::to_string(k) + ")", set_loops(m, s)});
    }
  r.components.push_back({"M(3,6,8)", set_loops(m, {3, 6, 8})});
  r.components.push_back({"U_{2,9}", uniform(2, 9)});
  for (int i = 1; i <= 9; ++i) r.components.push_back({loop_label({i}), set_loops(m, {i})});
  r.expected_count = 46;
  return r;
}

DecompositionRegistry cactus_registry(const std::string& name) {
  NamedConfig c = load_config(name);
  if (!is_cactus(c.matroid)) throw std::invalid_argument("no registry for " + name + ": not a cactus configuration");
  DecompositionRegistry r;
  r.name = c.name;
  r.base = c.matroid;
  r.source = "cactus configuration: loop subsets of the points of degree at least three";
  PointSet q = q_points(c.matroid);
  for (const auto& comp : cactus_loop_components(c.matroid)) {
    PointSet loops = set_minus(comp.loops(), c.matroid.loops());
    r.components.push_back({loops.empty() ? "M" : loop_label(loops), comp});
  }
  r.expected_count = 1 << q.size();
  return r;
}

}  // namespace

std::vector<std::string> registry_names() { return {"pascal", "pappus-m9", "third93", "cactus-fig"}; }

DecompositionRegistry registry(const std::string& name) {
  if (name == "pascal") return pascal_registry();
  if (name == "pappus-m9") return pappus_m9_registry();
  if (name == "third93") return third93_registry();
  return cactus_registry(name);
}

CoverReport cover_sanity(const DecompositionRegistry& reg, std::uint64_t seed) {
  CoverReport rep;
  std::set<Matroid> distinct;
  for (std::size_t i = 0; i < reg.components.size(); ++i) {
    const auto& c = reg.components[i];
    distinct.insert(c.matroid);
    if (!dependency_leq(reg.base, c.matroid)) {
      rep.above_base = false;
      rep.problems.push_back(c.label + " is not above the base");
    }
    auto cert = propagate_realization(c.matroid, sub_seed(seed, i));
    if (cert.outcome != RealizationCertificate::Outcome::Realization) continue;
    ++rep.realized;
    if (!includes_dependencies(cert.cfg, reg.base)) {
      rep.realizations_ok = false;
      rep.problems.push_back(c.label + ": realization misses a dependency of the base");
    }
  }
  rep.distinct = static_cast<int>(distinct.size());
  if (static_cast<int>(reg.components.size()) != reg.expected_count) {
    rep.count_ok = false;
    rep.problems.push_back("expected " + std::to_string(reg.expected_count) + " components, found " +
                           std::to_string(reg.components.size()));
  }
  return rep;
}

namespace {

std::string set_text(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

std::string delta_summary(const Matroid& base, const Matroid& n) {
  std::vector<std::string> parts;
  PointSet loops = set_minus(n.loops(), base.loops());
  if (!loops.empty()) parts.push_back("loops " + set_text(loops));
  auto base_par = base.parallel_classes();
  for (const auto& c : n.parallel_classes())
    if (std::find(base_par.begin(), base_par.end(), c) == base_par.end()) parts.push_back("parallel " + set_text(c));
  for (const auto& l : n.lines()) {
    // A line is new when some triple on it is independent in the base.
    bool fresh = false;
    for (std::size_t a = 0; a < l.size() && !fresh; ++a)
      for (std::size_t b = a + 1; b < l.size() && !fresh; ++b)
        for (std::size_t c = b + 1; c < l.size() && !fresh; ++c) fresh = !is_dependent(base, {l[a], l[b], l[c]});
    if (fresh) parts.push_back("line " + set_text(l));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out.empty() ? "none" : out;
}

std::string third93_minimal_label(const Matroid& n) {
  static const std::vector<RegistryComponent> named = [] {
    const Matroid m = builtin_config("third93").matroid;
    std::vector<RegistryComponent> out;
    for (const auto& c : registry("third93").components) {
      const std::string& l = c.label;
      bool single_loop = l.size() == 4 && l.rfind("M(", 0) == 0;
      if (l.rfind("A_", 0) == 0 || l == "B" || l.rfind("pi^", 0) == 0 || single_loop) out.push_back(c);
    }
    out.push_back({"C_1", identify_set(m, {1, 5, 9})});
    out.push_back({"C_2", identify_set(m, {2, 4, 7})});
    out.push_back({"D", add_circuit(m, {3, 6, 8})});
    return out;
  }();
  for (const auto& c : named)
    if (c.matroid == n) return c.label;
  return "";
}

// --- witnesses ---------------------------------------------------------------------

Vec3 witness_meet(const VectorConfig& cfg, const LinePairMeet& lp) {
  return meet_vectors(cfg[lp.first[0]], cfg[lp.first[1]], cfg[lp.second[0]], cfg[lp.second[1]]);
}

namespace {

bool spans_line_through(const Matroid& base, int point, const PointPair& pair) {
  for (const auto& l : lines_through(base, point)) {
    bool has = true;
    for (int p : pair) has = has && std::binary_search(l.begin(), l.end(), base.rep(p));
    if (has) return true;
  }
  return false;
}

NonConcurrencyWitness make_witness(const VectorConfig& cfg, int point, LinePairMeet a, LinePairMeet b) {
  return {cfg, point, a, b};
}

}  // namespace

bool witness_check(const NonConcurrencyWitness& w, const Matroid& base) {
  for (const auto* lp : {&w.meet_a, &w.meet_b})
    for (const auto& pair : {lp->first, lp->second})
      if (!spans_line_through(base, w.point, pair)) return false;
  Vec3 a = witness_meet(w.cfg, w.meet_a);
  Vec3 b = witness_meet(w.cfg, w.meet_b);
  return !is_zero(a) && !is_zero(b) && !proj_equal(a, b);
}

std::vector<std::string> witness_names() { return {"pascal-M7", "third93-M1", "third93-M3", "third93-M1,4"}; }

NamedWitness named_witness(const std::string& name) {
  NamedWitness nw;
  nw.name = name;
  if (name == "pascal-M7") {
    nw.base = builtin_config("pascal").matroid;
    nw.loop_variant = set_loops(nw.base, {7});
    auto cfg = VectorConfig::from_rows(9, {9, 8, 3, 6, 1, 5, 2, 4, 7},
                                       {{1, 0, 0, 1, 1, 1, 3, 0, 0},
                                        {0, 1, 0, 1, 2, 0, 1, 1, 0},
                                        {0, 0, 1, 1, 1, 2, 1, 4, 0}});
    nw.witnesses.push_back(make_witness(cfg, 7, {{9, 8}, {1, 5}}, {{9, 8}, {2, 4}}));
    nw.printed.push_back({make_vec(-1, -4, 0), make_vec(-12, -3, 0)});
    return nw;
  }
  // The printed label lists of the M(1) and M(3) matrices are interchanged;
  // each matrix is paired here with the list that makes it a realization.
  if (name == "third93-M1") {
    nw.base = builtin_config("third93").matroid;
    nw.loop_variant = set_loops(nw.base, {1});
    auto cfg = VectorConfig::from_rows(9, {4, 7, 8, 3, 2, 5, 6, 9, 1},
                                       {{1, 0, 0, 1, 0, 1, 1, 3, 0},
                                        {0, 1, 0, 1, 1, 0, 5, 10, 0},
                                        {0, 0, 1, 1, 1, 3, 0, 3, 0}});
    nw.witnesses.push_back(make_witness(cfg, 1, {{8, 9}, {2, 6}}, {{3, 5}, {2, 6}}));
    nw.printed.push_back({make_vec(3, 10, -5), make_vec(-3, -8, 7)});
    return nw;
  }
  if (name == "third93-M3") {
    nw.base = builtin_config("third93").matroid;
    nw.loop_variant = set_loops(nw.base, {3});
    auto cfg = VectorConfig::from_rows(9, {6, 8, 1, 4, 2, 5, 7, 9, 3},
                                       {{1, 0, 0, 1, 1, 1, 1, 0, 0},
                                        {0, 1, 0, 1, 0, 3, 2, 3, 0},
                                        {0, 0, 1, 1, 2, 1, 2, 1, 0}});
    nw.witnesses.push_back(make_witness(cfg, 3, {{2, 4}, {1, 5}}, {{2, 4}, {7, 9}}));
    nw.printed.push_back({make_vec(1, 3, -1), make_vec(2, 1, 3)});
    return nw;
  }
  if (name == "third93-M1,4") {
    nw.base = builtin_config("third93").matroid;
    nw.loop_variant = set_loops(nw.base, {1, 4});
    auto cfg = VectorConfig::from_rows(9, {7, 2, 3, 5, 8, 9, 6, 1, 4},
                                       {{1, 0, 0, 1, 1, 1, 5, 0, 0},
                                        {0, 1, 0, 1, 2, 0, 4, 0, 0},
                                        {0, 0, 1, 1, 0, 3, 7, 0, 0}});
    nw.witnesses.push_back(make_witness(cfg, 1, {{2, 6}, {3, 5}}, {{8, 9}, {3, 5}}));
    nw.printed.push_back({make_vec(5, 5, 7), make_vec(2, 2, 3)});
    nw.witnesses.push_back(make_witness(cfg, 4, {{7, 6}, {3, 2}}, {{8, 5}, {3, 2}}));
    nw.printed.push_back({make_vec(0, 4, 7), make_vec(0, 1, -1)});
    return nw;
  }
  throw std::invalid_argument("unknown witness: " + name);
}

std::string witness_name_for(const std::string& config, const PointSet& loops) {
  PointSet s = loops;
  std::sort(s.begin(), s.end());
  std::string name = config + "-M";
  for (std::size_t i = 0; i < s.size(); ++i) name += (i ? "," : "") + std::to_string(s[i]);
  for (const auto& w : witness_names())
    if (w == name) return w;
  throw std::invalid_argument("no witness for " + config + " with loops " + loop_label(s));
}

}  // namespace mvt
