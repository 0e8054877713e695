#include "matcha/sdk_kb.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"
#endif

#include "json.hpp"

namespace matcha {

using nlohmann::json;

const SdkPractice* SdkEntry::optional_practice(const std::string& key) const {
  for (const SdkPractice& p : optional_practices)
    if (p.key == key) return &p;
  return nullptr;
}

const SdkEntry* SdkKb::entry(const std::string& sdk_id) const {
  for (const SdkEntry& e : entries)
    if (e.sdk_id == sdk_id) return &e;
  return nullptr;
}

const char* practice_role_name(PracticeRole role) {
  return role == PracticeRole::Collect ? "collect" : "share";
}

std::optional<PracticeRole> practice_role_from(const std::string& name) {
  if (name == "collect" || name == "COLLECT") return PracticeRole::Collect;
  if (name == "share" || name == "SHARE") return PracticeRole::Share;
  return std::nullopt;
}

namespace {

struct SchemaCheck {
  const std::string& label;
  Severity severity;
  std::vector<Diagnostic>* diags;
  bool failed = false;

  void violation(const std::string& path, const std::string& what) {
    failed = true;
    if (diags) {
      Diagnostic d;
      d.severity = severity;
      d.code = codes::SchemaViolation;
      d.message = label + ": " + path + ": " + what;
      d.location.file = label;
      d.location.xml_path = path;
      diags->push_back(std::move(d));
    }
  }
};

std::optional<SdkPractice> parse_practice(const json& p, const Taxonomy& taxonomy,
                                          const std::string& path, SchemaCheck& check) {
  SdkPractice out;
  if (!p.contains("key") || !p["key"].is_string() || p["key"].get<std::string>().empty()) {
    check.violation(path + ".key", "missing or empty");
    return std::nullopt;
  }
  out.key = p["key"].get<std::string>();
  if (!p.contains("data_type") || !p["data_type"].is_string()) {
    check.violation(path + ".data_type", "missing");
    return std::nullopt;
  }
  auto ref = taxonomy.type_by_qualified_id(p["data_type"].get<std::string>());
  if (!ref) {
    check.violation(path + ".data_type",
                    "unknown data type " + p["data_type"].get<std::string>());
    return std::nullopt;
  }
  out.data_type = *ref;
  auto role = practice_role_from(p.value("role", ""));
  if (!role) {
    check.violation(path + ".role", "must be COLLECT or SHARE");
    return std::nullopt;
  }
  out.role = *role;
  if (!p.contains("purposes") || !p["purposes"].is_array() || p["purposes"].empty()) {
    check.violation(path + ".purposes", "must be a non-empty array");
    return std::nullopt;
  }
  for (const auto& pu : p["purposes"]) {
    auto purpose = taxonomy.purpose_by_id(pu.get<std::string>());
    if (!purpose) {
      check.violation(path + ".purposes", "unknown purpose " + pu.get<std::string>());
      return std::nullopt;
    }
    out.purposes.insert(*purpose);
  }
  out.ephemeral = p.value("ephemeral", false);
  out.optional = p.value("optional", false);
  out.condition_text = p.value("condition", "");
  out.since = p.value("since", 1);
  return out;
}

}  // namespace

std::optional<SdkKb> parse_kb_text(const std::string& json_text, const Taxonomy& taxonomy,
                                   const std::string& source_label,
                                   Severity violation_severity,
                                   std::vector<Diagnostic>* diagnostics) {
  SchemaCheck check{source_label, violation_severity, diagnostics};
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    check.violation("$", "not a JSON object");
    return std::nullopt;
  }
  if (!doc.contains("version") || !doc["version"].is_number_integer()) {
    check.violation("version", "missing integer version");
    return std::nullopt;
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    check.violation("entries", "missing array");
    return std::nullopt;
  }
  SdkKb kb;
  kb.version = doc["version"].get<int>();
  std::set<std::string> ids;
  size_t index = 0;
  for (const auto& e : doc["entries"]) {
    std::string path = "entries[" + std::to_string(index++) + "]";
    if (!e.contains("sdk_id") || !e["sdk_id"].is_string()) {
      check.violation(path + ".sdk_id", "missing");
      return std::nullopt;
    }
    SdkEntry entry;
    entry.sdk_id = e["sdk_id"].get<std::string>();
    path = "entries[" + entry.sdk_id + "]";
    if (!ids.insert(entry.sdk_id).second) {
      check.violation(path, "duplicate sdk_id");
      return std::nullopt;
    }
    entry.display_name = e.value("display_name", entry.sdk_id);
    if (!e.contains("maven_patterns") || !e["maven_patterns"].is_array() ||
        e["maven_patterns"].empty()) {
      check.violation(path + ".maven_patterns", "must be a non-empty array");
      return std::nullopt;
    }
    for (const auto& pat : e["maven_patterns"]) {
      std::string pattern = pat.get<std::string>();
      try {
        std::regex probe(pattern);
      } catch (const std::regex_error&) {
        check.violation(path + ".maven_patterns", "invalid regex: " + pattern);
        return std::nullopt;
      }
      entry.maven_patterns.push_back(std::move(pattern));
    }
    entry.guideline_url = e.value("guideline_url", "");
    entry.practices_known = e.value("practices_known", false);
    entry.transport_encryption_attested = e.value("transport_encryption_attested", false);
    auto load_practices = [&](const char* field, std::vector<SdkPractice>* out) {
      if (!e.contains(field)) return true;
      size_t pi = 0;
      for (const auto& p : e[field]) {
        auto practice = parse_practice(
            p, taxonomy, path + "." + field + "[" + std::to_string(pi++) + "]", check);
        if (!practice) return false;
        out->push_back(std::move(*practice));
      }
      return true;
    };
    if (!load_practices("always_practices", &entry.always_practices)) return std::nullopt;
    if (!load_practices("optional_practices", &entry.optional_practices)) return std::nullopt;
    if (!entry.practices_known &&
        (!entry.always_practices.empty() || !entry.optional_practices.empty())) {
      check.violation(path, "practices_known=false entries must have no practices");
      return std::nullopt;
    }
    kb.entries.push_back(std::move(entry));
  }
  return kb;
}

namespace {

std::optional<std::string> default_https_fetch(const std::string& url) {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
  if (url.rfind("https://", 0) != 0) return std::nullopt;
  std::string rest = url.substr(8);
  auto slash = rest.find('/');
  std::string host = slash == std::string::npos ? rest : rest.substr(0, slash);
  std::string path = slash == std::string::npos ? "/" : rest.substr(slash);
  int port = 443;
  auto colon = host.find(':');
  if (colon != std::string::npos) {
    port = std::atoi(host.substr(colon + 1).c_str());
    host = host.substr(0, colon);
  }
  httplib::SSLClient client(host, port);
  client.set_connection_timeout(5, 0);
  client.set_read_timeout(5, 0);
  auto res = client.Get(path);
  if (!res || res->status != 200) return std::nullopt;
  return res->body;
#else
  (void)url;
  return std::nullopt;
#endif
}

}  // namespace

KbLoadResult load_kb(const std::string& bundled_path, const std::string& remote_url,
                     bool offline, const Taxonomy& taxonomy, KbFetcher fetcher) {
  KbLoadResult result;
  std::ifstream in(bundled_path, std::ios::binary);
  if (!in) {
    result.diagnostics.push_back({Severity::Error, codes::SchemaViolation,
                                  "cannot open bundled SDK knowledge base: " + bundled_path,
                                  {bundled_path, 0, 0, ""},
                                  {}});
    return result;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  result.kb = parse_kb_text(buf.str(), taxonomy, bundled_path, Severity::Error,
                            &result.diagnostics);
  if (!result.kb) return result;

  if (remote_url.empty() || offline) return result;
  if (remote_url.rfind("https://", 0) != 0) {
    result.diagnostics.push_back({Severity::Warning, codes::KbRemoteUnavailable,
                                  "remote KB url must use https; using the bundled snapshot",
                                  {remote_url, 0, 0, ""},
                                  {}});
    return result;
  }
  if (!fetcher) fetcher = default_https_fetch;
  std::optional<std::string> body = fetcher(remote_url);
  if (!body) {
    result.diagnostics.push_back({Severity::Info, codes::KbRemoteUnavailable,
                                  "remote KB not reachable; using the bundled snapshot",
                                  {remote_url, 0, 0, ""},
                                  {}});
    return result;
  }
  std::vector<Diagnostic> remote_diags;
  auto remote = parse_kb_text(*body, taxonomy, remote_url, Severity::Warning, &remote_diags);
  for (Diagnostic& d : remote_diags) result.diagnostics.push_back(std::move(d));
  if (remote) {
    result.kb = std::move(remote);
    result.from_remote = true;
  } else {
    result.diagnostics.push_back({Severity::Warning, codes::KbRemoteUnavailable,
                                  "remote KB failed schema validation; using the bundled "
                                  "snapshot",
                                  {remote_url, 0, 0, ""},
                                  {}});
  }
  return result;
}

std::vector<SdkMatch> match_sdks(const std::vector<std::string>& coordinates,
                                 const SdkKb& kb) {
  std::vector<SdkMatch> out;
  for (const SdkEntry& entry : kb.entries) {
    // Lexicographically smallest matching coordinate, so the result does not
    // depend on coordinate order.
    std::optional<std::string> matched;
    for (const std::string& pattern : entry.maven_patterns) {
      std::regex re(pattern);
      for (const std::string& coordinate : coordinates) {
        if ((!matched || coordinate < *matched) && std::regex_match(coordinate, re)) {
          matched = coordinate;
        }
      }
    }
    if (matched) out.push_back({&entry, *matched});
  }
  std::sort(out.begin(), out.end(), [](const SdkMatch& a, const SdkMatch& b) {
    return a.entry->sdk_id < b.entry->sdk_id;
  });
  return out;
}

}  // namespace matcha
