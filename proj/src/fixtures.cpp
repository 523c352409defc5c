#include "mvt/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "mvt/json_io.hpp"

#ifndef MVT_DEFAULT_FIXTURE_DIR
#define MVT_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace mvt {

namespace fs = std::filesystem;

namespace {

struct Builtin {
  int d;
  std::vector<PointSet> lines;  // presentation order
};

const std::map<std::string, Builtin>& builtins() {
  static const std::map<std::string, Builtin> table = {
      {"pascal", {9, {{1, 6, 8}, {1, 5, 7}, {2, 4, 7}, {2, 6, 9}, {3, 4, 8}, {3, 5, 9}, {7, 8, 9}}}},
      {"pappus",
       {9, {{1, 2, 3}, {1, 6, 8}, {1, 5, 7}, {2, 4, 7}, {2, 6, 9}, {3, 4, 8}, {3, 5, 9}, {7, 8, 9}, {4, 5, 6}}}},
      {"fano", {7, {{1, 2, 5}, {3, 4, 5}, {1, 3, 6}, {2, 4, 6}, {2, 3, 7}, {1, 4, 7}, {5, 6, 7}}}},
      {"qs", {6, {{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}}}},
      {"grid3", {9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9}}}},
      {"three-lines", {7, {{1, 2, 7}, {3, 4, 7}, {5, 6, 7}}}},
      {"third93",
       {9, {{1, 2, 6}, {1, 3, 5}, {1, 8, 9}, {2, 3, 4}, {2, 7, 8}, {3, 7, 9}, {4, 5, 8}, {4, 6, 7}, {5, 6, 9}}}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"pascal", "pappus", "fano", "qs", "grid3", "three-lines", "third93"};
  return names;
}

bool is_builtin(const std::string& name) { return builtins().count(name) > 0; }

NamedConfig builtin_config(const std::string& name) {
  auto it = builtins().find(name);
  if (it == builtins().end()) throw std::invalid_argument("unknown configuration: " + name);
  NamedConfig c;
  c.name = name;
  c.matroid = Matroid(it->second.d, {}, {}, it->second.lines);
  c.line_order = it->second.lines;
  return c;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("MVT_FIXTURES"); env && *env) return env;
  return MVT_DEFAULT_FIXTURE_DIR;
}

std::vector<std::string> registry_keys() {
  std::vector<std::string> keys = builtin_names();
  std::vector<std::string> extra;
  std::error_code ec;
  fs::path dir(fixture_dir());
  if (fs::is_directory(dir, ec)) {
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
      if (entry.path().extension() != ".json") continue;
      std::string stem = entry.path().stem().string();
      if (!is_builtin(stem)) extra.push_back(stem);
    }
  }
  std::sort(extra.begin(), extra.end());
  keys.insert(keys.end(), extra.begin(), extra.end());
  return keys;
}

NamedConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open configuration file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  NamedConfig c;
  c.name = j.contains("name") ? j["name"].get<std::string>() : fs::path(path).stem().string();
  c.matroid = matroid_from_json(j, &c.line_order);
  return c;
}

NamedConfig load_config(const std::string& name_or_path) {
  std::error_code ec;
  if (fs::is_regular_file(name_or_path, ec)) return config_from_file(name_or_path);
  fs::path candidate = fs::path(fixture_dir()) / (name_or_path + ".json");
  if (fs::is_regular_file(candidate, ec)) {
    NamedConfig c = config_from_file(candidate.string());
    c.name = name_or_path;
    return c;
  }
  return builtin_config(name_or_path);
}

std::vector<PointSet> presentation_lines(const NamedConfig& c) {
  if (!c.line_order.empty()) return c.line_order;
  return c.matroid.effective_lines();
}

std::optional<VectorConfig> known_realization(const std::string& name) {
  if (name == "qs") {
    // The printed matrix uses labels with 3 and 5 exchanged relative to the
    // line list {1,2,3},{1,5,6},{2,4,6},{3,4,5}.
    return VectorConfig::from_rows(6, {1, 2, 5, 4, 3, 6},
                                   {{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 1, 0, 1}});
  }
  if (name == "third93") {
    // Rational point of the parametrized realization space (parameters 2 and 5).
    return VectorConfig::from_rows(9, {1, 2, 3, 4, 5, 6, 7, 8, 9},
                                   {{1, 1, 0, 1, -1, 0, 1, 1, -1},
                                    {0, 0, 1, 5, 3, 0, 5, 1, 3},
                                    {0, 2, 0, 2, 0, 1, -3, 1, 3}});
  }
  return std::nullopt;
}

}  // namespace mvt
