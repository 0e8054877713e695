#pragma once

#include <string>

#include "matcha/config.hpp"

namespace matcha {

/// Directory holding the bundled data files (taxonomy.json, api_list.json,
/// keyword_list.json, sdk_kb.json, console_mapping.json, annotations/).
/// Resolution order: MATCHA_DATA_DIR env var, the build-tree data directory,
/// the install-tree data directory.
std::string locate_data_dir();

struct DataPaths {
  std::string taxonomy;
  std::string api_list;
  std::string keyword_list;
  std::string kb;
  std::string console_mapping;
};

/// Bundled paths with per-file config overrides applied (relative overrides
/// resolve against the project root).
DataPaths resolve_data_paths(const std::string& data_dir, const ProjectConfig& config,
                             const std::string& project_root);

}  // namespace matcha
