#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace matcha {

/// Minimal TOML reader covering what matcha.toml needs: [tables], string /
/// boolean / integer values, and arrays of strings. Unknown syntax fails
/// loudly rather than guessing.
struct TomlValue {
  std::variant<std::string, bool, int64_t, std::vector<std::string>> value;
};

struct TomlDoc {
  // flattened "table.key" -> value
  std::map<std::string, TomlValue> values;

  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<std::vector<std::string>> get_string_array(const std::string& key) const;
};

std::optional<TomlDoc> parse_toml(const std::string& text, std::string* error);

/// Project configuration, from matcha.toml at the project root.
struct ProjectConfig {
  std::vector<std::string> source_roots;  // default: ["."]
  std::vector<std::string> gradle_files;  // default: discovered build.gradle files
  std::string api_list_path;              // overrides; empty = bundled
  std::string keyword_list_path;
  std::string kb_path;
  std::string taxonomy_path;
  std::string console_mapping_path;
  std::string kb_remote_url;
  bool offline = false;
};

struct ConfigResult {
  ProjectConfig config;
  std::string error;  // non-empty on failure
  bool from_file = false;
};

/// Loads <project_root>/matcha.toml when present; absent file yields the
/// default configuration.
ConfigResult load_project_config(const std::string& project_root);

}  // namespace matcha
