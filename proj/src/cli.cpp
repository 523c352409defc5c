#include "mvt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mvt/bracket.hpp"
#include "mvt/decomposition.hpp"
#include "mvt/family.hpp"
#include "mvt/fixtures.hpp"
#include "mvt/geometry.hpp"
#include "mvt/incidence.hpp"
#include "mvt/json_io.hpp"
#include "mvt/lifting.hpp"

namespace mvt::cli {

namespace {

// Bad option values and unknown configurations; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string format = "text";
  std::uint64_t seed = 0;
  int trials = 20;
  int depth = 1;
  std::string del;
  std::string loop;
  std::string mode = "single";
  std::string with;
  std::string at;
  std::string vectors;
};

std::string set_text(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

PointSet parse_points(const std::string& text, const char* flag) {
  PointSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int p = std::stoi(item, &used);
      if (used != item.size() || p < 1) throw std::invalid_argument(item);
      out.push_back(p);
    } catch (const std::exception&) {
      throw UsageError(std::string("invalid point list for ") + flag + ": " + text);
    }
  }
  if (out.empty()) throw UsageError(std::string("empty point list for ") + flag);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NamedConfig load(const Options& o) {
  if (o.config.empty()) throw UsageError("--config is required");
  try {
    return load_config(o.config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_points(const Matroid& m, const PointSet& s, const char* flag) {
  for (int p : s)
    if (p > m.ground_size())
      throw UsageError(std::string(flag) + ": point " + std::to_string(p) + " is outside the ground set");
}

// The configuration with --loop points turned into loops and --delete points
// removed (remaining points relabeled 1..k).
Matroid modified_matroid(const Options& o, const NamedConfig& c) {
  Matroid m = c.matroid;
  if (!o.loop.empty()) {
    PointSet l = parse_points(o.loop, "--loop");
    check_points(m, l, "--loop");
    m = set_loops(m, l);
  }
  if (!o.del.empty()) {
    PointSet d = parse_points(o.del, "--delete");
    check_points(m, d, "--delete");
    m = delete_points(m, d);
  }
  return m;
}

bool modified(const Options& o) { return !o.loop.empty() || !o.del.empty(); }

json vec_json(const Vec3& v) { return json::array({to_string(v[0]), to_string(v[1]), to_string(v[2])}); }

json sets_json(const std::vector<PointSet>& ss) {
  json a = json::array();
  for (const auto& s : ss) a.push_back(point_set_to_json(s));
  return a;
}

void print_config(std::ostream& os, const VectorConfig& cfg) {
  for (int p = 1; p <= cfg.size(); ++p) os << "  " << p << ": " << to_string(cfg[p]) << "\n";
}

// --- verbs -------------------------------------------------------------------------

using Emit = std::function<void(const json&, const std::string&)>;

int cmd_info(const Options& o, const Emit& emit) {
  NamedConfig c = load(o);
  Matroid m = modified_matroid(o, c);
  json j;
  j["name"] = c.name;
  j["ground_size"] = m.ground_size();
  j["lines"] = m.effective_lines().size();
  j["loops"] = point_set_to_json(m.loops());
  j["parallel_classes"] = sets_json(m.parallel_classes());
  j["rank"] = rank(m, all_points(m.ground_size()));
  j["simple"] = m.is_simple();
  j["nilpotent"] = is_nilpotent(m);
  j["solvable"] = is_solvable(m);
  bool simple = m.is_simple();
  if (simple) {
    j["cactus"] = is_cactus(m);
    j["forest"] = is_forest(m);
  }
  j["S"] = point_set_to_json(s_points(m));
  j["Q"] = point_set_to_json(q_points(m));
  j["matroid"] = matroid_to_json(m);
  std::ostringstream os;
  os << "name: " << c.name << "\n";
  os << "d: " << m.ground_size() << "\n";
  os << "lines: " << m.effective_lines().size() << "\n";
  os << "loops: " << set_text(m.loops()) << "\n";
  os << "parallel classes: " << m.parallel_classes().size() << "\n";
  os << "rank: " << j["rank"].get<int>() << "\n";
  os << "nilpotent: " << bool_text(j["nilpotent"]) << "\n";
  os << "solvable: " << bool_text(j["solvable"]) << "\n";
  if (simple) {
    os << "cactus: " << bool_text(j["cactus"]) << "\n";
    os << "forest: " << bool_text(j["forest"]) << "\n";
  }
  os << "S: " << set_text(s_points(m)) << "\n";
  os << "Q: " << set_text(q_points(m)) << "\n";
  os << "matroid: " << describe(m) << "\n";
  emit(j, os.str());
  return 0;
}

int cmd_chain(const Options& o, const Emit& emit) {
  Matroid m = modified_matroid(o, load(o));
  json j;
  std::ostringstream os;
  for (int deg : {2, 3}) {
    const char* name = deg == 2 ? "nilpotency" : "solvable";
    auto lv = chain_levels(m, deg);
    j[name] = sets_json(lv);
    os << name << " chain:\n";
    for (std::size_t i = 0; i < lv.size(); ++i) os << "  level " << i << ": " << set_text(lv[i]) << "\n";
    os << "  terminates: " << bool_text(lv.back().empty()) << "\n";
  }
  auto ord = nilpotent_ordering(m);
  if (ord) {
    j["ordering"] = ord->order;
    j["degrees"] = ord->w;
    os << "nilpotent ordering:";
    for (int p : ord->order) os << " " << p;
    os << "\ndegrees:";
    for (int w : ord->w) os << " " << w;
    os << "\n";
  } else {
    j["ordering"] = nullptr;
    os << "nilpotent ordering: none\n";
  }
  emit(j, os.str());
  return 0;
}

std::string cycle_text(const CycleWitness& c) {
  std::string out = "points " + set_text([&] {
    PointSet p = c.points;
    std::sort(p.begin(), p.end());
    return p;
  }()) + " lines";
  for (const auto& l : c.lines) out += " " + set_text(l);
  return out;
}

json cycle_json(const CycleWitness& c) { return json{{"points", c.points}, {"lines", sets_json(c.lines)}}; }

int cmd_cactus(const Options& o, const Emit& emit) {
  Matroid m = modified_matroid(o, load(o));
  CactusReport rep = cactus_report(m);
  json j;
  std::ostringstream os;
  j["cactus"] = rep.cactus;
  os << "cactus: " << bool_text(rep.cactus) << "\n";
  if (rep.cactus) {
    json comps = json::array();
    for (const auto& comp : cactus_components(m)) {
      bool line = comp.kind == CactusComponent::Kind::Line;
      comps.push_back(json{{"kind", line ? "line" : "cycle"}, {"lines", sets_json(comp.lines)}});
      os << (line ? "line" : "cycle");
      for (const auto& l : comp.lines) os << " " << set_text(l);
      os << "\n";
    }
    j["components"] = comps;
  } else {
    j["offending_lines"] = sets_json(rep.offending_lines);
    for (const auto& l : rep.offending_lines) os << "offending line: " << set_text(l) << "\n";
    json ws = json::array();
    for (const auto& w : rep.witnesses) {
      ws.push_back(cycle_json(w));
      os << "cycle: " << cycle_text(w) << "\n";
    }
    j["cycles"] = ws;
  }
  emit(j, os.str());
  return 0;
}

int cmd_forest(const Options& o, const Emit& emit) {
  Matroid m = modified_matroid(o, load(o));
  auto cyc = find_cycle(m);
  json j;
  std::ostringstream os;
  j["forest"] = !cyc.has_value();
  os << "forest: " << bool_text(!cyc) << "\n";
  if (cyc) {
    j["cycle"] = cycle_json(*cyc);
    os << "cycle: " << cycle_text(*cyc) << "\n";
  }
  emit(j, os.str());
  return 0;
}

int cmd_glue(const Options& o, const Emit& emit) {
  if (o.with.empty() || o.at.empty()) throw UsageError("glue needs --with NAME and --at P,Q");
  Matroid a = modified_matroid(o, load(o));
  Options ob;
  ob.config = o.with;
  Matroid b = load(ob).matroid;
  std::vector<int> at;
  {
    std::stringstream ss(o.at);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        at.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw UsageError("invalid --at: " + o.at);
      }
    }
  }
  if (at.size() != 2) throw UsageError("--at takes two points P,Q");
  if (at[0] < 1 || at[0] > a.ground_size() || at[1] < 1 || at[1] > b.ground_size())
    throw UsageError("--at points must lie in the respective ground sets");
  Matroid g = free_gluing(a, b, at[0], at[1]);
  json j = matroid_to_json(g);
  std::ostringstream os;
  os << describe(g) << "\n";
  emit(j, os.str());
  return 0;
}

int cmd_components(const Options& o, const Emit& emit) {
  Matroid m = modified_matroid(o, load(o));
  if (!is_cactus(m)) {
    auto rep = cactus_report(m);
    std::string line = rep.offending_lines.empty() ? "" : " (offending line " + set_text(rep.offending_lines[0]) + ")";
    emit(json{{"cactus", false}, {"offending_lines", sets_json(rep.offending_lines)}},
         "not a cactus configuration" + line + "\n");
    return 1;
  }
  json arr = json::array();
  std::ostringstream os;
  auto comps = cactus_loop_components(m);
  os << "components: " << comps.size() << "\n";
  for (const auto& n : comps) {
    PointSet extra = set_minus(n.loops(), m.loops());
    std::string label = "M";
    if (!extra.empty()) {
      label = "M(";
      for (std::size_t i = 0; i < extra.size(); ++i) label += (i ? "," : "") + std::to_string(extra[i]);
      label += ")";
    }
    arr.push_back(json{{"label", label}, {"matroid", matroid_to_json(n)}});
    os << label << "\n";
  }
  emit(json{{"components", arr}}, os.str());
  return 0;
}

int cmd_circuit_gens(const Options& o, const Emit& emit) {
  Matroid m = modified_matroid(o, load(o));
  auto gens = circuit_generators(m);
  json arr = json::array();
  std::ostringstream os;
  for (const auto& g : gens) {
    arr.push_back(to_text(g));
    os << to_text(g) << "\n";
  }
  emit(json{{"count", gens.size()}, {"generators", arr}}, os.str());
  return 0;
}

int cmd_gc_gens(const Options& o, const Emit& emit) {
  NamedConfig c = load(o);
  Matroid m = modified_matroid(o, c);
  if (o.depth < 1) throw UsageError("--depth must be at least 1");
  auto gens = gc_generators(m, o.depth);
  json j;
  std::ostringstream os;
  json arr = json::array();
  os << "generated (depth " << o.depth << "): " << gens.size() << "\n";
  for (const auto& g : gens) {
    arr.push_back(to_text(g));
    os << to_text(g) << "\n";
  }
  j["generated"] = arr;
  int code = 0;
  if (!modified(o) && (c.name == "pascal" || c.name == "pappus")) {
    // The printed recipes, expanded and compared with the printed polynomials.
    json cur = json::array();
    const auto& recipe = curated_recipe(c.name);
    os << "curated: " << recipe.size() << "\n";
    for (const auto& r : recipe) {
      BracketPoly e = expand_gc(r.expression);
      json item{{"expression", r.expression}, {"expansion", to_text(e)}};
      os << r.expression << " = " << to_text(e);
      if (!r.printed.empty()) {
        bool same = identity_test(e, parse_poly(r.printed), o.trials, o.seed, true);
        item["printed"] = r.printed;
        item["matches_printed"] = same;
        os << "  [printed: " << (same ? "match" : "MISMATCH") << "]";
        if (!same) code = 1;
      }
      os << "\n";
      cur.push_back(item);
    }
    j["curated"] = cur;
  }
  emit(j, os.str());
  return code;
}

int cmd_lift_matrix(const Options& o, const Emit& emit) {
  NamedConfig c = load(o);
  Matroid m = modified_matroid(o, c);
  QMode mode;
  try {
    mode = parse_qmode(o.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  LiftMatrix lm = modified(o) ? lift_matrix(m, mode) : lift_matrix(m, mode, presentation_lines(c));
  json rows = json::array();
  for (const auto& row : lm.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(entry_text(e));
    rows.push_back(r);
  }
  emit(json{{"rows", sets_json(lm.rows)}, {"columns", lm.cols}, {"entries", rows}}, matrix_text(lm));
  return 0;
}

int cmd_lift_dim(const Options& o, const Emit& emit) {
  Matroid m = modified_matroid(o, load(o));
  int k = kernel_dim_draws(m, 1, o.seed, Exec::Serial)[0];
  json j{{"kernel_dim", k}};
  std::ostringstream os;
  os << "kernel_dim: " << k << "\n";
  if (m.is_simple() && is_nilpotent(m)) {
    int f = dim_recursive(m);
    int z = dim_ordering(m);
    j["dim_formula"] = f;
    j["ordering_count"] = z;
    os << "dim_formula: " << f << "\n";
    os << "ordering_count: " << z << "\n";
  } else {
    j["dim_formula"] = nullptr;
    os << "dim_formula: n/a (not a simple nilpotent matroid)\n";
  }
  emit(j, os.str());
  return 0;
}

int cmd_count_gens(const Options& o, const Emit& emit) {
  NamedConfig c = load(o);
  Matroid m = modified_matroid(o, c);
  std::size_t circuit = circuit_generators(m).size();
  // The Grassmann-Cayley count follows the printed recipe where one exists.
  bool curated = !modified(o) && (c.name == "pascal" || c.name == "pappus");
  std::size_t gc = curated ? curated_recipe(c.name).size() : gc_generators(m, o.depth).size();
  json j{{"circuit", circuit}, {"gc", gc}};
  std::ostringstream os;
  os << "circuit: " << circuit << "\n";
  os << "gc: " << gc << "\n";
  if (!modified(o) && has_generator_count_spec(c.name)) {
    auto spec = generator_count_spec(c.name);
    Z total = lifting_generator_count(spec);
    j["lifting"] = to_string(total);
    os << "lifting: " << to_string(total) << "\n";
    json parts = json::array();
    for (const auto& it : spec)
      parts.push_back(json{{"label", it.label}, {"count", to_string(lifting_generator_count({it}))}});
    j["lifting_parts"] = parts;
  } else {
    j["lifting"] = nullptr;
    os << "lifting: n/a\n";
  }
  emit(j, os.str());
  return 0;
}

int cmd_realize(const Options& o, const Emit& emit) {
  NamedConfig c = load(o);
  Matroid m = modified_matroid(o, c);
  auto cert = propagate_realization(m, o.seed);
  json j;
  std::ostringstream os;
  j["seed"] = o.seed;
  j["order"] = cert.order;
  j["trace"] = cert.trace;
  if (cert.outcome == RealizationCertificate::Outcome::Realization) {
    j["outcome"] = "realization";
    j["source"] = "propagation";
    j["configuration"] = config_to_json(cert.cfg);
    j["verified"] = is_realization(cert.cfg, m);
    os << "outcome: realization\n";
    os << "verified: " << bool_text(j["verified"]) << "\n";
    print_config(os, cert.cfg);
    emit(j, os.str());
    return j["verified"].get<bool>() ? 0 : 1;
  }
  if (!modified(o) && cert.outcome == RealizationCertificate::Outcome::Inconclusive) {
    if (auto known = known_realization(c.name); known && is_realization(*known, m)) {
      j["outcome"] = "realization";
      j["source"] = "printed";
      j["configuration"] = config_to_json(*known);
      j["verified"] = true;
      os << "outcome: realization\n";
      os << "source: printed data (propagation inconclusive)\n";
      os << "verified: true\n";
      print_config(os, *known);
      emit(j, os.str());
      return 0;
    }
  }
  j["outcome"] = outcome_name(cert.outcome);
  j["stuck_point"] = cert.stuck_point;
  os << "outcome: " << outcome_name(cert.outcome) << "\n";
  os << "stuck point: " << cert.stuck_point << "\n";
  if (cert.outcome == RealizationCertificate::Outcome::Infeasible) {
    j["determinant"] = to_string(cert.witness);
    os << "determinant: " << to_string(cert.witness) << "\n";
  }
  for (const auto& t : cert.trace) os << "  " << t << "\n";
  emit(j, os.str());
  return 1;
}

int cmd_check_member(const Options& o, const Emit& emit) {
  if (o.vectors.empty()) throw UsageError("check-member needs --vectors PATH (JSON vector configuration)");
  Matroid m = modified_matroid(o, load(o));
  VectorConfig cfg;
  try {
    std::ifstream in(o.vectors);
    if (!in) throw std::invalid_argument("cannot open " + o.vectors);
    json jv;
    in >> jv;
    cfg = config_from_json(jv, m.ground_size());
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  bool incl = includes_dependencies(cfg, m);
  bool real = is_realization(cfg, m);
  std::size_t nonvanishing = 0;
  for (const auto& g : circuit_generators(m))
    if (evaluate(g, cfg) != 0) ++nonvanishing;
  json j{{"circuit_variety", incl}, {"realization", real}, {"nonvanishing_circuit_generators", nonvanishing}};
  std::ostringstream os;
  os << "circuit variety: " << bool_text(incl) << "\n";
  os << "realization: " << bool_text(real) << "\n";
  os << "nonvanishing circuit generators: " << nonvanishing << "\n";
  emit(j, os.str());
  return incl ? 0 : 1;
}

int cmd_min_matroids(const Options& o, const Emit& emit) {
  NamedConfig c = load(o);
  Matroid m = modified_matroid(o, c);
  auto mins = minimal_matroids(m);
  bool third93 = !modified(o) && c.name == "third93";
  json arr = json::array();
  std::ostringstream os;
  os << "base: " << describe(m) << "\n";
  os << "minimal matroids: " << mins.size() << "\n";
  for (const auto& n : mins) {
    json item{{"matroid", matroid_to_json(n)}, {"canonical", canonical_form(n)}, {"delta", delta_summary(m, n)}};
    std::string label = third93 ? third93_minimal_label(n) : "";
    item["class"] = label.empty() ? json(nullptr) : json(label);
    arr.push_back(item);
    os << (label.empty() ? "-" : label) << ": " << delta_summary(m, n) << "\n";
  }
  emit(json{{"base", matroid_to_json(m)}, {"count", mins.size()}, {"matroids", arr}}, os.str());
  return 0;
}

int cmd_registry(const Options& o, const Emit& emit) {
  if (o.config.empty()) throw UsageError("--config is required");
  DecompositionRegistry reg;
  try {
    reg = registry(o.config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  CoverReport rep = cover_sanity(reg, o.seed);
  json comps = json::array();
  std::ostringstream os;
  os << "registry: " << reg.name << "\n";
  os << "components: " << reg.components.size() << " (expected " << reg.expected_count << ")\n";
  for (const auto& comp : reg.components) {
    comps.push_back(json{{"label", comp.label}, {"matroid", matroid_to_json(comp.matroid)}});
    os << "  " << comp.label << ": " << describe(comp.matroid) << "\n";
  }
  os << "distinct: " << rep.distinct << "\n";
  os << "realized: " << rep.realized << "\n";
  os << "above base: " << bool_text(rep.above_base) << "\n";
  os << "realizations contain base dependencies: " << bool_text(rep.realizations_ok) << "\n";
  os << "count matches: " << bool_text(rep.count_ok) << "\n";
  for (const auto& p : rep.problems) os << "problem: " << p << "\n";
  emit(json{{"name", reg.name},
            {"expected_count", reg.expected_count},
            {"components", comps},
            {"distinct", rep.distinct},
            {"realized", rep.realized},
            {"above_base", rep.above_base},
            {"realizations_ok", rep.realizations_ok},
            {"count_ok", rep.count_ok},
            {"problems", rep.problems}},
       os.str());
  return rep.ok() ? 0 : 1;
}

int cmd_witness(const Options& o, const Emit& emit) {
  if (o.config.empty() || o.loop.empty()) throw UsageError("witness needs --config NAME and --loop P[,P...]");
  std::string name;
  try {
    name = witness_name_for(o.config, parse_points(o.loop, "--loop"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  NamedWitness nw = named_witness(name);
  bool all = true;
  json ws = json::array();
  std::ostringstream os;
  os << "witness: " << name << "\n";
  os << "configuration realizes component: " << bool_text(is_realization(nw.witnesses[0].cfg, nw.loop_variant)) << "\n";
  all = all && is_realization(nw.witnesses[0].cfg, nw.loop_variant);
  for (std::size_t i = 0; i < nw.witnesses.size(); ++i) {
    const auto& w = nw.witnesses[i];
    Vec3 a = witness_meet(w.cfg, w.meet_a);
    Vec3 b = witness_meet(w.cfg, w.meet_b);
    bool ok = witness_check(w, nw.base);
    bool pa = proj_equal(a, nw.printed[i][0]);
    bool pb = proj_equal(b, nw.printed[i][1]);
    all = all && ok && pa && pb;
    auto pair_text = [](const PointPair& p) { return std::to_string(p[0]) + std::to_string(p[1]); };
    os << "point " << w.point << ":\n";
    os << "  " << pair_text(w.meet_a.first) << " ^ " << pair_text(w.meet_a.second) << " = " << to_string(a)
       << " (printed " << to_string(nw.printed[i][0]) << ": " << (pa ? "match" : "MISMATCH") << ")\n";
    os << "  " << pair_text(w.meet_b.first) << " ^ " << pair_text(w.meet_b.second) << " = " << to_string(b)
       << " (printed " << to_string(nw.printed[i][1]) << ": " << (pb ? "match" : "MISMATCH") << ")\n";
    os << "  verdict: " << (ok ? "meets differ, lines through " + std::to_string(w.point) + " not concurrent" : "FAILED")
       << "\n";
    ws.push_back(json{{"point", w.point},
                      {"meet_a", vec_json(a)},
                      {"meet_b", vec_json(b)},
                      {"printed_a", vec_json(nw.printed[i][0])},
                      {"printed_b", vec_json(nw.printed[i][1])},
                      {"verified", ok && pa && pb}});
  }
  os << "verdict: " << (all ? "verified" : "FAILED") << "\n";
  emit(json{{"witness", name}, {"configuration", config_to_json(nw.witnesses[0].cfg)}, {"meets", ws}, {"verified", all}},
       os.str());
  return all ? 0 : 1;
}

int cmd_family(const Options& o, const Emit& emit) {
  if (o.config.empty()) throw UsageError("family needs --config FAMILY");
  NamedFamily nf;
  try {
    nf = named_family(o.config);
  } catch (const UnsupportedFamily& e) {
    emit(json{{"family", o.config}, {"supported", false}, {"reason", e.what()}}, std::string("unsupported: ") + e.what() + "\n");
    return 1;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool member = family_member_check(nf.family, nf.base);
  VectorConfig lim = family_limit(nf.family);
  bool limit_ok = true;
  json cols = json::object();
  std::ostringstream os;
  os << "family: " << o.config << "\n";
  os << "parameters:";
  for (const auto& p : nf.parameters) os << " " << p;
  os << "\n";
  os << "generic member of base: " << bool_text(member) << "\n";
  os << "limit:\n";
  for (int p = 1; p <= lim.size(); ++p) {
    bool same = (is_zero(lim[p]) && is_zero(nf.xi[p])) || proj_equal(lim[p], nf.xi[p]);
    limit_ok = limit_ok && same;
    os << "  " << p << ": " << to_string(lim[p]) << " (printed " << to_string(nf.xi[p]) << ": "
       << (same ? "match" : "MISMATCH") << ")\n";
    cols[std::to_string(p)] = vec_json(lim[p]);
  }
  bool target = includes_dependencies(lim, nf.target);
  os << "limit lies in target circuit variety: " << bool_text(target) << "\n";
  bool ok = member && limit_ok && target;
  os << "verdict: " << (ok ? "verified" : "FAILED") << "\n";
  emit(json{{"family", family_to_json(nf.family)},
            {"parameters", nf.parameters},
            {"member", member},
            {"limit", cols},
            {"limit_matches_printed", limit_ok},
            {"limit_in_target", target},
            {"verified", ok}},
       os.str());
  return ok ? 0 : 1;
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Result res;
  Options o;
  CLI::App app{"Exact computations with rank-3 matroids and their circuit varieties", "mvt"};
  app.require_subcommand(1);

  struct Verb {
    const char* name;
    const char* help;
    int (*fn)(const Options&, const Emit&);
    std::vector<std::string> extra;  // verb-specific options
  };
  const std::vector<Verb> verbs = {
      {"info", "summary of a configuration", cmd_info, {"delete", "loop"}},
      {"chain", "nilpotency and solvable chains", cmd_chain, {"delete", "loop"}},
      {"cactus", "cactus test and components", cmd_cactus, {"delete"}},
      {"forest", "forest test with a cycle witness", cmd_forest, {"delete"}},
      {"glue", "free gluing of two configurations", cmd_glue, {"with", "at"}},
      {"components", "loop components M(J) of a cactus configuration", cmd_components, {"delete"}},
      {"circuit-gens", "circuit ideal generators", cmd_circuit_gens, {"delete", "loop"}},
      {"gc-gens", "Grassmann-Cayley generators", cmd_gc_gens, {"delete", "loop", "depth", "trials"}},
      {"lift-matrix", "symbolic liftability matrix", cmd_lift_matrix, {"delete", "loop", "mode"}},
      {"lift-dim", "kernel dimension of the liftability matrix", cmd_lift_dim, {"delete"}},
      {"count-gens", "numbers of circuit, Grassmann-Cayley and lifting generators", cmd_count_gens, {"depth"}},
      {"realize", "realization by propagation", cmd_realize, {"delete", "loop"}},
      {"check-member", "circuit-variety membership of a vector configuration", cmd_check_member,
       {"delete", "loop", "vectors"}},
      {"min-matroids", "minimal matroids in the dependency order", cmd_min_matroids, {"delete", "loop"}},
      {"registry", "decomposition registry with sanity checks", cmd_registry, {}},
      {"witness", "irredundancy witness", cmd_witness, {"loop"}},
      {"family", "one-parameter family, membership and limit", cmd_family, {}},
  };

  std::map<CLI::App*, const Verb*> handlers;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--config", o.config, "configuration name or JSON path");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "random seed");
    for (const auto& e : v.extra) {
      if (e == "delete") sub->add_option("--delete", o.del, "points to delete, P[,P...]");
      if (e == "loop") sub->add_option("--loop", o.loop, "points to turn into loops, P[,P...]");
      if (e == "depth") sub->add_option("--depth", o.depth, "substitution depth");
      if (e == "trials") sub->add_option("--trials", o.trials, "identity-test trials");
      if (e == "mode") sub->add_option("--mode", o.mode, "q mode")->check(CLI::IsMember({"single", "per-column"}));
      if (e == "with") sub->add_option("--with", o.with, "second configuration");
      if (e == "at") sub->add_option("--at", o.at, "glued points P,Q");
      if (e == "vectors") sub->add_option("--vectors", o.vectors, "JSON vector configuration");
    }
    handlers[sub] = &v;
  }

  std::ostringstream out, err;
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.code = code == 0 ? 0 : 2;
    return res;
  }

  const Verb* verb = nullptr;
  for (auto* sub : app.get_subcommands()) verb = handlers.at(sub);
  const bool as_json = o.format == "json";
  std::string text;
  Emit emit = [&](const json& j, const std::string& t) { text = as_json ? j.dump(2) + "\n" : t; };
  try {
    res.code = verb->fn(o, emit);
    res.out = text;
  } catch (const UsageError& e) {
    res.code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const GuardError& e) {
    res.code = 1;
    res.err = std::string("resource guard: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.code = 1;
    res.out = text;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace mvt::cli
