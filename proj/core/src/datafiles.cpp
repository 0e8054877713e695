#include "matcha/datafiles.hpp"

#include <cstdlib>
#include <filesystem>

namespace matcha {

namespace fs = std::filesystem;

std::string locate_data_dir() {
  if (const char* env = std::getenv("MATCHA_DATA_DIR")) {
    if (*env) return env;
  }
#ifdef MATCHA_BUNDLED_DATA_DIR
  if (fs::exists(fs::path(MATCHA_BUNDLED_DATA_DIR) / "taxonomy.json"))
    return MATCHA_BUNDLED_DATA_DIR;
#endif
#ifdef MATCHA_INSTALL_DATA_DIR
  if (fs::exists(fs::path(MATCHA_INSTALL_DATA_DIR) / "taxonomy.json"))
    return MATCHA_INSTALL_DATA_DIR;
#endif
  return "";
}

namespace {

std::string pick(const std::string& override_path, const std::string& data_dir,
                 const char* name, const std::string& project_root) {
  if (override_path.empty()) return data_dir + "/" + name;
  fs::path p(override_path);
  if (p.is_absolute()) return override_path;
  return (fs::path(project_root) / p).string();
}

}  // namespace

DataPaths resolve_data_paths(const std::string& data_dir, const ProjectConfig& config,
                             const std::string& project_root) {
  DataPaths paths;
  paths.taxonomy = pick(config.taxonomy_path, data_dir, "taxonomy.json", project_root);
  paths.api_list = pick(config.api_list_path, data_dir, "api_list.json", project_root);
  paths.keyword_list =
      pick(config.keyword_list_path, data_dir, "keyword_list.json", project_root);
  paths.kb = pick(config.kb_path, data_dir, "sdk_kb.json", project_root);
  paths.console_mapping =
      pick(config.console_mapping_path, data_dir, "console_mapping.json", project_root);
  return paths;
}

}  // namespace matcha
