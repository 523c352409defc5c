#include "mvt/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvt {

json point_set_to_json(const PointSet& s) {
  json a = json::array();
  for (int p : s) a.push_back(p);
  return a;
}

json matroid_to_json(const Matroid& m) {
  json j;
  j["ground_size"] = m.ground_size();
  json lines = json::array();
  for (const auto& l : m.lines()) lines.push_back(point_set_to_json(l));
  j["lines"] = lines;
  j["loops"] = point_set_to_json(m.loops());
  json par = json::array();
  for (const auto& c : m.parallel_classes()) par.push_back(point_set_to_json(c));
  j["parallels"] = par;
  j["rank_cap"] = m.rank_cap();
  return j;
}

namespace {

PointSet read_set(const json& a, const char* what) {
  if (!a.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of points");
  PointSet s;
  for (const auto& x : a) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + " entries must be integers");
    s.push_back(x.get<int>());
  }
  return s;
}

}  // namespace

Matroid matroid_from_json(const json& j, std::vector<PointSet>* presentation) {
  if (!j.is_object()) throw std::invalid_argument("matroid JSON must be an object");
  if (!j.contains("ground_size") || !j["ground_size"].is_number_integer())
    throw std::invalid_argument("matroid JSON needs an integer ground_size");
  int d = j["ground_size"].get<int>();
  PointSet loops;
  std::vector<PointSet> par, lines;
  if (j.contains("loops")) loops = read_set(j["loops"], "loops");
  if (j.contains("parallels"))
    for (const auto& c : j["parallels"]) par.push_back(read_set(c, "parallel class"));
  if (j.contains("lines")) {
    for (const auto& l : j["lines"]) {
      PointSet s = read_set(l, "line");
      std::sort(s.begin(), s.end());
      lines.push_back(s);
    }
  }
  int cap = 3;
  if (j.contains("rank_cap")) cap = j["rank_cap"].get<int>();
  if (presentation) *presentation = lines;
  return Matroid(d, loops, par, lines, cap);
}

json config_to_json(const VectorConfig& c) {
  json j = json::object();
  for (int p = 1; p <= c.size(); ++p) {
    json v = json::array();
    for (int k = 0; k < 3; ++k) v.push_back(to_string(c[p][k]));
    j[std::to_string(p)] = v;
  }
  return j;
}

VectorConfig config_from_json(const json& j, int d) {
  if (!j.is_object()) throw std::invalid_argument("vector configuration JSON must be an object");
  int maxp = 0;
  for (auto it = j.begin(); it != j.end(); ++it) maxp = std::max(maxp, std::stoi(it.key()));
  if (d < 0) d = maxp;
  if (maxp > d) throw std::invalid_argument("vector configuration mentions a point outside the ground set");
  VectorConfig c(d);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int p = std::stoi(it.key());
    if (p < 1) throw std::invalid_argument("points are 1-based");
    const json& v = it.value();
    if (!v.is_array() || v.size() != 3) throw std::invalid_argument("each vector needs three entries");
    for (int k = 0; k < 3; ++k) {
      if (v[k].is_string())
        c[p][k] = parse_rational(v[k].get<std::string>());
      else if (v[k].is_number_integer())
        c[p][k] = Q(v[k].get<long>());
      else
        throw std::invalid_argument("vector entries must be rational strings or integers");
    }
  }
  return c;
}

}  // namespace mvt
