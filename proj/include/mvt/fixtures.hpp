// Named configurations: the built-in registry plus JSON files found in the
// fixture directory (default: the repository's fixtures/, overridable with
// the MVT_FIXTURES environment variable).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvt/matroid.hpp"
#include "mvt/vector_config.hpp"

namespace mvt {

struct NamedConfig {
  std::string name;
  Matroid matroid;
  // Lines in the order they are presented (used for liftability-matrix rows).
  std::vector<PointSet> line_order;
};

const std::vector<std::string>& builtin_names();
bool is_builtin(const std::string& name);
NamedConfig builtin_config(const std::string& name);

std::string fixture_dir();
// Builtin names followed by the JSON fixture names in fixture_dir().
std::vector<std::string> registry_keys();
// Resolves an existing file path, then <fixture_dir>/<name>.json, then the
// builtin registry. Throws std::invalid_argument for unknown names.
NamedConfig load_config(const std::string& name_or_path);
NamedConfig config_from_file(const std::string& path);

// Rows of the matroid's presentation order, falling back to sorted lines.
std::vector<PointSet> presentation_lines(const NamedConfig& c);

// Exact realizations that appear as printed data (used when propagation
// cannot construct one).
std::optional<VectorConfig> known_realization(const std::string& name);

}  // namespace mvt
