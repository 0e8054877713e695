#include "matcha/custom_usage.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "matcha/text.hpp"

namespace matcha {

namespace {

// ------------------------------------------------------------- mini XML
// The overlay schema is two levels deep with attribute-only elements, so a
// small reader with exact byte positions beats a generic DOM here: sync must
// preserve existing elements byte-for-byte.

struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlElement> children;
  Span span;  // '<' through '>' of the close (or self-close)

  const std::string* attribute(const std::string& key) const {
    for (const auto& [k, v] : attributes)
      if (k == key) return &v;
    return nullptr;
  }
};

struct XmlReader {
  const std::string& text;
  size_t pos = 0;
  std::string error;
  size_t error_pos = 0;

  bool fail(const std::string& what, size_t at) {
    if (error.empty()) {
      error = what;
      error_pos = at;
    }
    return false;
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  void skip_misc() {
    // whitespace, comments, prolog
    while (true) {
      skip_ws();
      if (text.compare(pos, 4, "<!--") == 0) {
        size_t end = text.find("-->", pos + 4);
        if (end == std::string::npos) {
          pos = text.size();
          return;
        }
        pos = end + 3;
        continue;
      }
      if (text.compare(pos, 2, "<?") == 0) {
        size_t end = text.find("?>", pos + 2);
        if (end == std::string::npos) {
          pos = text.size();
          return;
        }
        pos = end + 2;
        continue;
      }
      return;
    }
  }

  static std::string decode_entities(std::string_view raw) {
    std::string out;
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      auto take = [&](std::string_view entity, char c) {
        if (raw.compare(i, entity.size(), entity) == 0) {
          out += c;
          i += entity.size() - 1;
          return true;
        }
        return false;
      };
      if (take("&amp;", '&') || take("&lt;", '<') || take("&gt;", '>') ||
          take("&quot;", '"') || take("&apos;", '\''))
        continue;
      out += raw[i];
    }
    return out;
  }

  bool parse_name(std::string* out) {
    size_t begin = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '-' ||
            text[pos] == '_' || text[pos] == ':'))
      ++pos;
    if (pos == begin) return fail("expected a name", begin);
    *out = text.substr(begin, pos - begin);
    return true;
  }

  bool parse_element(XmlElement* out) {
    skip_misc();
    if (pos >= text.size() || text[pos] != '<')
      return fail("expected '<'", pos);
    size_t open_pos = pos;
    ++pos;
    if (!parse_name(&out->name)) return false;
    while (true) {
      skip_ws();
      if (pos >= text.size()) return fail("unterminated tag", open_pos);
      if (text[pos] == '/') {
        if (pos + 1 >= text.size() || text[pos + 1] != '>')
          return fail("malformed self-closing tag", pos);
        pos += 2;
        out->span = {static_cast<uint32_t>(open_pos), static_cast<uint32_t>(pos)};
        return true;
      }
      if (text[pos] == '>') {
        ++pos;
        break;
      }
      std::string key;
      if (!parse_name(&key)) return false;
      skip_ws();
      if (pos >= text.size() || text[pos] != '=')
        return fail("expected '=' after attribute " + key, pos);
      ++pos;
      skip_ws();
      if (pos >= text.size() || (text[pos] != '"' && text[pos] != '\''))
        return fail("expected quoted value for attribute " + key, pos);
      char quote = text[pos];
      size_t vbegin = ++pos;
      while (pos < text.size() && text[pos] != quote) ++pos;
      if (pos >= text.size()) return fail("unterminated attribute value", vbegin);
      out->attributes.emplace_back(
          key, decode_entities(std::string_view(text).substr(vbegin, pos - vbegin)));
      ++pos;  // closing quote
    }
    // children / close tag
    while (true) {
      skip_misc();
      if (pos >= text.size())
        return fail("missing </" + out->name + ">", open_pos);
      if (text[pos] == '<' && pos + 1 < text.size() && text[pos + 1] == '/') {
        size_t close_pos = pos;
        pos += 2;
        std::string close_name;
        if (!parse_name(&close_name)) return false;
        skip_ws();
        if (pos >= text.size() || text[pos] != '>')
          return fail("malformed close tag", close_pos);
        ++pos;
        if (close_name != out->name)
          return fail("mismatched close tag </" + close_name + ">", close_pos);
        out->span = {static_cast<uint32_t>(open_pos), static_cast<uint32_t>(pos)};
        return true;
      }
      if (text[pos] == '<') {
        XmlElement child;
        if (!parse_element(&child)) return false;
        out->children.push_back(std::move(child));
        continue;
      }
      // Bare text content is not part of the schema; tolerate and skip it.
      while (pos < text.size() && text[pos] != '<') ++pos;
    }
  }
};

std::string encode_entities(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

SourceLoc xml_loc(const std::string& file, const std::string& path) {
  SourceLoc loc;
  loc.file = file;
  loc.xml_path = path;
  return loc;
}

}  // namespace

const CustomUsageEntry* CustomUsageDoc::entry(const std::string& sdk_id) const {
  for (const CustomUsageEntry& e : entries)
    if (e.sdk_id == sdk_id) return &e;
  return nullptr;
}

XmlParseResult parse_custom_usage_xml(const std::string& text, const SdkKb& kb,
                                      const std::string& file_label) {
  XmlParseResult result;
  XmlReader reader{text, 0, "", 0};
  XmlElement root;
  if (!reader.parse_element(&root)) {
    LineIndex lines(text);
    LineCol at = lines.locate(static_cast<uint32_t>(
        std::min(reader.error_pos, text.size() ? text.size() - 1 : 0)));
    Diagnostic d{Severity::Error, codes::MalformedXml, reader.error,
                 {file_label, at.line, at.col, ""},
                 {}};
    result.diagnostics.push_back(std::move(d));
    return result;
  }
  if (root.name != kCustomUsageRootElement) {
    result.diagnostics.push_back({Severity::Error, codes::MalformedXml,
                                  "root element must be <" +
                                      std::string(kCustomUsageRootElement) + ">",
                                  xml_loc(file_label, "/" + root.name),
                                  {}});
    return result;
  }
  CustomUsageDoc doc;
  doc.text = text;
  if (const std::string* schema = root.attribute("schema")) {
    doc.schema = std::atoi(schema->c_str());
  }
  for (const XmlElement& el : root.children) {
    std::string base_path = "/" + std::string(kCustomUsageRootElement) + "/" + el.name;
    if (el.name != "library-custom-usage") {
      result.diagnostics.push_back({Severity::Error, codes::MalformedXml,
                                    "unexpected element <" + el.name + ">",
                                    xml_loc(file_label, base_path),
                                    {}});
      continue;
    }
    const std::string* lib = el.attribute("lib");
    if (!lib || lib->empty()) {
      result.diagnostics.push_back({Severity::Error, codes::MalformedXml,
                                    "<library-custom-usage> requires a lib attribute",
                                    xml_loc(file_label, base_path),
                                    {}});
      continue;
    }
    std::string path = base_path + "[@lib='" + *lib + "']";
    const SdkEntry* kb_entry = kb.entry(*lib);
    if (!kb_entry) {
      result.diagnostics.push_back({Severity::Error, codes::UnknownSdkId,
                                    "unknown library id \"" + *lib + "\"",
                                    xml_loc(file_label, path),
                                    {}});
      continue;
    }
    CustomUsageEntry entry;
    entry.sdk_id = *lib;
    entry.span = el.span;
    entry.xml_path = path;
    if (const std::string* verified = el.attribute("verified"))
      entry.verified = *verified == "true";
    if (const std::string* kbv = el.attribute("kb-version"))
      entry.kb_version = std::atoi(kbv->c_str());
    bool entry_ok = true;
    for (const XmlElement& data : el.children) {
      if (data.name != "data") {
        result.diagnostics.push_back({Severity::Error, codes::MalformedXml,
                                      "unexpected element <" + data.name + "> under " + path,
                                      xml_loc(file_label, path + "/" + data.name),
                                      {}});
        entry_ok = false;
        continue;
      }
      const std::string* key = data.attribute("key");
      if (!key || key->empty()) {
        result.diagnostics.push_back({Severity::Error, codes::MalformedXml,
                                      "<data> requires a key attribute",
                                      xml_loc(file_label, path + "/data"),
                                      {}});
        entry_ok = false;
        continue;
      }
      if (!kb_entry->optional_practice(*key)) {
        result.diagnostics.push_back(
            {Severity::Error, codes::UnknownPracticeKey,
             "<data key=\"" + *key + "\"> does not match any optional practice of " +
                 kb_entry->display_name,
             xml_loc(file_label, path + "/data[@key='" + *key + "']"),
             {}});
        entry_ok = false;
        continue;
      }
      entry.retained_keys.push_back(*key);
    }
    if (entry_ok) doc.entries.push_back(std::move(entry));
  }
  result.doc = std::move(doc);
  return result;
}

namespace {

std::string render_new_entry(const SdkEntry& entry, int kb_version) {
  std::ostringstream out;
  out << "  <library-custom-usage lib=\"" << encode_entities(entry.sdk_id)
      << "\" verified=\"false\" kb-version=\"" << kb_version << "\">\n";
  for (const SdkPractice& p : entry.optional_practices) {
    out << "    <data key=\"" << encode_entities(p.key) << "\""
        << " type=\"" << p.data_type.qualified() << "\""
        << " role=\"" << practice_role_name(p.role) << "\""
        << " purposes=\"";
    bool first = true;
    for (Purpose purpose : p.purposes) {
      if (!first) out << ";";
      first = false;
      switch (purpose) {
        case Purpose::AppFunctionality: out << "app_functionality"; break;
        case Purpose::Analytics: out << "analytics"; break;
        case Purpose::DeveloperCommunications: out << "developer_communications"; break;
        case Purpose::AdvertisingOrMarketing: out << "advertising_or_marketing"; break;
        case Purpose::FraudPreventionSecurityCompliance:
          out << "fraud_prevention_security_compliance";
          break;
        case Purpose::Personalization: out << "personalization"; break;
        case Purpose::AccountManagement: out << "account_management"; break;
      }
    }
    out << "\" ephemeral=\"" << (p.ephemeral ? "true" : "false") << "\" optional=\""
        << (p.optional ? "true" : "false") << "\"";
    if (!p.condition_text.empty())
      out << " condition=\"" << encode_entities(p.condition_text) << "\"";
    out << "/>\n";
  }
  out << "  </library-custom-usage>\n";
  return out.str();
}

}  // namespace

SyncResult sync_custom_usage_xml(const std::vector<SdkMatch>& matched,
                                 const std::optional<CustomUsageDoc>& existing,
                                 const SdkKb& kb, const std::string& file_label) {
  SyncResult result;

  // Deterministic order: new elements sorted by sdk_id.
  std::vector<const SdkEntry*> to_add;
  for (const SdkMatch& m : matched) {
    if (!m.entry->needs_verification()) continue;
    if (existing && existing->entry(m.entry->sdk_id)) continue;
    to_add.push_back(m.entry);
  }
  std::sort(to_add.begin(), to_add.end(),
            [](const SdkEntry* a, const SdkEntry* b) { return a->sdk_id < b->sdk_id; });

  if (existing) {
    // Never re-add removed <data> children; only warn when the KB moved on.
    for (const CustomUsageEntry& entry : existing->entries) {
      const SdkEntry* kb_entry = kb.entry(entry.sdk_id);
      if (!kb_entry) continue;
      for (const SdkPractice& p : kb_entry->optional_practices) {
        bool retained = std::find(entry.retained_keys.begin(), entry.retained_keys.end(),
                                  p.key) != entry.retained_keys.end();
        if (!retained && p.since > entry.kb_version) {
          result.diagnostics.push_back(
              {Severity::Warning, codes::StaleVerification,
               kb_entry->display_name + " gained practice \"" + p.key +
                   "\" after this entry was generated; re-review and update kb-version",
               xml_loc(file_label, entry.xml_path),
               {}});
        }
      }
    }
  }

  if (existing && to_add.empty()) {
    result.xml = existing->text;  // fixed point, byte-identical
    return result;
  }

  std::string additions;
  for (const SdkEntry* entry : to_add) {
    additions += render_new_entry(*entry, kb.version);
    result.added_entries++;
  }

  if (!existing) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<" << kCustomUsageRootElement << " schema=\"" << kCustomUsageSchemaVersion
        << "\">\n";
    out << additions;
    out << "</" << kCustomUsageRootElement << ">\n";
    result.xml = out.str();
    return result;
  }

  // Splice the new elements just before the root close tag; everything else
  // is preserved byte-for-byte.
  std::string close_tag = "</" + std::string(kCustomUsageRootElement) + ">";
  size_t close = existing->text.rfind(close_tag);
  if (close == std::string::npos) {
    result.diagnostics.push_back({Severity::Error, codes::MalformedXml,
                                  "cannot find " + close_tag + " to extend the document",
                                  xml_loc(file_label, "/"),
                                  {}});
    result.xml = existing->text;
    return result;
  }
  result.xml = existing->text.substr(0, close) + additions + existing->text.substr(close);
  return result;
}

}  // namespace matcha
