#include "matcha/config.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace matcha {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::optional<std::string> parse_quoted(const std::string& text, size_t* pos,
                                        std::string* error) {
  if (*pos >= text.size() || text[*pos] != '"') {
    if (error) *error = "expected a double-quoted string";
    return std::nullopt;
  }
  std::string out;
  for (size_t i = *pos + 1; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\\' && i + 1 < text.size()) {
      ++i;
      switch (text[i]) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        default: out += text[i];
      }
      continue;
    }
    if (c == '"') {
      *pos = i + 1;
      return out;
    }
    out += c;
  }
  if (error) *error = "unterminated string";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> TomlDoc::get_string(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  if (const auto* s = std::get_if<std::string>(&it->second.value)) return *s;
  return std::nullopt;
}

std::optional<bool> TomlDoc::get_bool(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  if (const auto* b = std::get_if<bool>(&it->second.value)) return *b;
  return std::nullopt;
}

std::optional<std::vector<std::string>> TomlDoc::get_string_array(
    const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  if (const auto* a = std::get_if<std::vector<std::string>>(&it->second.value)) return *a;
  return std::nullopt;
}

std::optional<TomlDoc> parse_toml(const std::string& text, std::string* error) {
  TomlDoc doc;
  std::string table;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    if (error) *error = "line " + std::to_string(line_no) + ": " + what;
    return std::nullopt;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    if (stripped.front() == '[') {
      if (stripped.back() != ']') return fail("malformed table header");
      table = trim(stripped.substr(1, stripped.size() - 2));
      if (table.empty()) return fail("empty table name");
      continue;
    }
    auto eq = stripped.find('=');
    if (eq == std::string::npos) return fail("expected key = value");
    std::string key = trim(stripped.substr(0, eq));
    std::string value_text = trim(stripped.substr(eq + 1));
    if (key.empty()) return fail("empty key");
    std::string full_key = table.empty() ? key : table + "." + key;
    if (value_text.empty()) return fail("missing value for " + key);
    TomlValue value;
    if (value_text.front() == '"') {
      size_t pos = 0;
      std::string err;
      auto s = parse_quoted(value_text, &pos, &err);
      if (!s) return fail(err);
      if (!trim(value_text.substr(pos)).empty() && trim(value_text.substr(pos))[0] != '#')
        return fail("trailing content after string value");
      value.value = *s;
    } else if (value_text.front() == '[') {
      std::vector<std::string> items;
      size_t pos = 1;
      while (true) {
        while (pos < value_text.size() &&
               (std::isspace(static_cast<unsigned char>(value_text[pos])) ||
                value_text[pos] == ','))
          ++pos;
        if (pos >= value_text.size()) return fail("unterminated array");
        if (value_text[pos] == ']') break;
        std::string err;
        auto s = parse_quoted(value_text, &pos, &err);
        if (!s) return fail("arrays may contain only strings (" + err + ")");
        items.push_back(*s);
      }
      value.value = std::move(items);
    } else if (value_text == "true" || value_text == "false") {
      value.value = value_text == "true";
    } else {
      // bare integer
      std::string digits = value_text;
      auto hash = digits.find('#');
      if (hash != std::string::npos) digits = trim(digits.substr(0, hash));
      try {
        value.value = static_cast<int64_t>(std::stoll(digits));
      } catch (...) {
        return fail("unsupported value: " + value_text);
      }
    }
    doc.values[full_key] = std::move(value);
  }
  return doc;
}

ConfigResult load_project_config(const std::string& project_root) {
  ConfigResult result;
  result.config.source_roots = {"."};
  namespace fs = std::filesystem;
  fs::path path = fs::path(project_root) / "matcha.toml";
  std::ifstream in(path, std::ios::binary);
  if (!in) return result;  // defaults
  std::stringstream buf;
  buf << in.rdbuf();
  std::string error;
  auto doc = parse_toml(buf.str(), &error);
  if (!doc) {
    result.error = "matcha.toml: " + error;
    return result;
  }
  result.from_file = true;
  ProjectConfig& cfg = result.config;
  if (auto v = doc->get_string_array("project.source_roots")) cfg.source_roots = *v;
  if (auto v = doc->get_string_array("project.gradle_files")) cfg.gradle_files = *v;
  if (auto v = doc->get_string("data.api_list")) cfg.api_list_path = *v;
  if (auto v = doc->get_string("data.keyword_list")) cfg.keyword_list_path = *v;
  if (auto v = doc->get_string("data.kb_file")) cfg.kb_path = *v;
  if (auto v = doc->get_string("data.taxonomy")) cfg.taxonomy_path = *v;
  if (auto v = doc->get_string("data.console_mapping")) cfg.console_mapping_path = *v;
  if (auto v = doc->get_string("kb.remote_url")) cfg.kb_remote_url = *v;
  if (auto v = doc->get_bool("kb.offline")) cfg.offline = *v;
  return result;
}

}  // namespace matcha
