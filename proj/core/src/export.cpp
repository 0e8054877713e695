#include "matcha/export.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "matcha/text.hpp"

namespace matcha {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kCanonicalHeader =
    "category,data_type,collected,shared,ephemeral,required,collection_purposes,"
    "sharing_purposes,sources";

std::string join_purposes(const Taxonomy& tax, const PurposeSet& purposes) {
  return render_purpose_set(tax, purposes, ";", /*display_names=*/false);
}

std::string join_sources(const std::set<std::string>& sources) {
  std::string out;
  for (const std::string& s : sources) {
    if (!out.empty()) out += ";";
    out += s;
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string render_canonical_csv(const SafetyLabel& label, const Taxonomy& taxonomy) {
  std::ostringstream out;
  out << kCanonicalHeader << "\n";
  // label.rows is keyed by DataTypeRef, already (category, type) sorted.
  for (const auto& [type, row] : label.rows) {
    out << type.category_id << "," << type.type_id << ","
        << (row.collected ? "true" : "false") << "," << (row.shared ? "true" : "false")
        << "," << (row.ephemeral ? "true" : "false") << ","
        << (row.required ? "true" : "false") << ","
        << join_purposes(taxonomy, row.collection_purposes) << ","
        << join_purposes(taxonomy, row.sharing_purposes) << ","
        << join_sources(row.sources) << "\n";
  }
  return out.str();
}

std::optional<std::map<DataTypeRef, LabelRow>> parse_canonical_csv(
    const std::string& csv_text, const Taxonomy& taxonomy, std::string* error) {
  std::istringstream in(csv_text);
  std::string line;
  if (!std::getline(in, line) || line != kCanonicalHeader) {
    if (error) *error = "unexpected header";
    return std::nullopt;
  }
  std::map<DataTypeRef, LabelRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 9) {
      if (error) *error = "line " + std::to_string(line_no) + ": expected 9 fields";
      return std::nullopt;
    }
    DataTypeRef type{fields[0], fields[1]};
    if (!taxonomy.has_type(type)) {
      if (error) *error = "line " + std::to_string(line_no) + ": unknown type";
      return std::nullopt;
    }
    LabelRow row;
    row.collected = fields[2] == "true";
    row.shared = fields[3] == "true";
    row.ephemeral = fields[4] == "true";
    row.required = fields[5] == "true";
    auto parse_purposes = [&](const std::string& text, PurposeSet* out_set) {
      if (text.empty()) return true;
      for (const std::string& id : split(text, ';')) {
        auto p = taxonomy.purpose_by_id(id);
        if (!p) return false;
        out_set->insert(*p);
      }
      return true;
    };
    if (!parse_purposes(fields[6], &row.collection_purposes) ||
        !parse_purposes(fields[7], &row.sharing_purposes)) {
      if (error) *error = "line " + std::to_string(line_no) + ": unknown purpose";
      return std::nullopt;
    }
    if (!fields[8].empty()) {
      for (const std::string& s : split(fields[8], ';')) row.sources.insert(s);
    }
    rows[type] = std::move(row);
  }
  return rows;
}

std::optional<std::string> render_console_csv(const SafetyLabel& label,
                                              const Taxonomy& taxonomy,
                                              const std::string& mapping_json,
                                              std::string* error) {
  json mapping = json::parse(mapping_json, nullptr, false);
  if (mapping.is_discarded()) {
    if (error) *error = "console mapping: invalid JSON";
    return std::nullopt;
  }
  std::string yes = "Yes", no = "No", join = "; ";
  bool display_names = true;
  if (mapping.contains("render")) {
    const auto& r = mapping["render"];
    yes = r.value("true", yes);
    no = r.value("false", no);
    join = r.value("purpose_join", join);
    display_names = r.value("purpose_names", "display") == std::string("display");
  }
  auto bool_response = [&](bool b) { return b ? yes : no; };

  std::ostringstream out;
  out << "question_id,response\n";
  auto emit = [&](const std::string& id, const std::string& response) {
    std::string quoted = response;
    if (quoted.find(',') != std::string::npos || quoted.find('"') != std::string::npos) {
      std::string escaped;
      for (char c : quoted) {
        if (c == '"') escaped += '"';
        escaped += c;
      }
      quoted = "\"" + escaped + "\"";
    }
    out << id << "," << quoted << "\n";
  };

  try {
    for (const auto& g : mapping.value("globals", json::array())) {
      std::string source = g.at("source").get<std::string>();
      std::string id = g.at("question_id").get<std::string>();
      if (source == "has_rows") {
        emit(id, bool_response(!label.rows.empty()));
      } else if (source == "all_encrypted_in_transit") {
        emit(id, bool_response(label.all_encrypted_in_transit));
      } else {
        if (error) *error = "console mapping: unknown global source " + source;
        return std::nullopt;
      }
    }
    for (const auto& [type, row] : label.rows) {
      for (const auto& q : mapping.value("per_row", json::array())) {
        std::string id = q.at("question_id").get<std::string>();
        std::string source = q.at("source").get<std::string>();
        auto replace_all = [](std::string text, const std::string& from,
                              const std::string& to) {
          size_t pos = 0;
          while ((pos = text.find(from, pos)) != std::string::npos) {
            text.replace(pos, from.size(), to);
            pos += to.size();
          }
          return text;
        };
        id = replace_all(id, "{category}", type.category_id);
        id = replace_all(id, "{data_type}", type.type_id);
        std::string response;
        if (source == "collected") response = bool_response(row.collected);
        else if (source == "shared") response = bool_response(row.shared);
        else if (source == "ephemeral") response = bool_response(row.ephemeral);
        else if (source == "required") response = bool_response(row.required);
        else if (source == "collection_purposes")
          response = render_purpose_set(taxonomy, row.collection_purposes, join,
                                        display_names);
        else if (source == "sharing_purposes")
          response = render_purpose_set(taxonomy, row.sharing_purposes, join,
                                        display_names);
        else if (source == "sources") response = join_sources(row.sources);
        else {
          if (error) *error = "console mapping: unknown row source " + source;
          return std::nullopt;
        }
        emit(id, response);
      }
    }
  } catch (const json::exception& e) {
    if (error) *error = std::string("console mapping: ") + e.what();
    return std::nullopt;
  }
  return out.str();
}

std::string render_label_json(const SafetyLabel& label, const Taxonomy& taxonomy) {
  json doc;
  doc["format"] = "matcha-label";
  doc["version"] = 1;
  doc["all_encrypted_in_transit"] = label.all_encrypted_in_transit;
  doc["pending"] = label.pending;
  json rows = json::array();
  for (const auto& [type, row] : label.rows) {
    json r;
    r["category"] = type.category_id;
    r["data_type"] = type.type_id;
    r["category_display"] = taxonomy.category_display(type.category_id);
    r["type_display"] = taxonomy.type_display(type);
    r["collected"] = row.collected;
    r["shared"] = row.shared;
    r["ephemeral"] = row.ephemeral;
    r["required"] = row.required;
    json cp = json::array(), sp = json::array();
    for (Purpose p : row.collection_purposes) cp.push_back(taxonomy.purpose_info(p).id);
    for (Purpose p : row.sharing_purposes) sp.push_back(taxonomy.purpose_info(p).id);
    r["collection_purposes"] = cp;
    r["sharing_purposes"] = sp;
    json sources = json::array();
    for (const std::string& s : row.sources) sources.push_back(s);
    r["sources"] = sources;
    json prov = json::array();
    for (const Provenance& p : row.provenance) prov.push_back(p.to_string());
    r["provenance"] = prov;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

ExportResult export_label(const SafetyLabel& label, const Taxonomy& taxonomy,
                          const std::string& mapping_path, const std::string& out_dir,
                          const std::vector<Diagnostic>& outstanding) {
  ExportResult result;
  if (!label.pending.empty()) {
    std::string names;
    for (const std::string& id : label.pending) {
      if (!names.empty()) names += ", ";
      names += id;
    }
    result.diagnostics.push_back({Severity::Error, codes::PendingVerification,
                                  "unverified libraries block export: " + names,
                                  {kCustomUsageFileName, 0, 0, ""},
                                  {}});
    return result;
  }
  for (const Diagnostic& d : outstanding) {
    if (d.severity == Severity::Error) {
      result.diagnostics.push_back({Severity::Error, codes::OutstandingErrors,
                                    "`matcha check` reports errors; fix them before "
                                    "exporting",
                                    {"", 0, 0, ""},
                                    {}});
      return result;
    }
  }

  std::string mapping_json;
  {
    std::ifstream in(mapping_path, std::ios::binary);
    if (!in) {
      result.diagnostics.push_back({Severity::Error, codes::SchemaViolation,
                                    "cannot open console mapping: " + mapping_path,
                                    {mapping_path, 0, 0, ""},
                                    {}});
      return result;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    mapping_json = buf.str();
  }
  std::string error;
  auto console = render_console_csv(label, taxonomy, mapping_json, &error);
  if (!console) {
    result.diagnostics.push_back({Severity::Error, codes::SchemaViolation, error,
                                  {mapping_path, 0, 0, ""},
                                  {}});
    return result;
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  struct Out {
    const char* name;
    std::string content;
  };
  Out files[] = {
      {"data-safety.csv", render_canonical_csv(label, taxonomy)},
      {"console.csv", *console},
      {"label.json", render_label_json(label, taxonomy)},
  };
  for (const Out& f : files) {
    std::string path = (fs::path(out_dir) / f.name).string();
    if (!write_file_atomic(path, f.content)) {
      result.diagnostics.push_back({Severity::Error, codes::OutstandingErrors,
                                    "cannot write " + path,
                                    {path, 0, 0, ""},
                                    {}});
      return result;
    }
    result.written.push_back(path);
  }
  result.ok = true;
  return result;
}

}  // namespace matcha
