#include "matcha/preview.hpp"

#include <map>
#include <sstream>

namespace matcha {

namespace {

std::string html_escape(const std::string& raw) {
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

struct InertExplanation {
  const PracticeFact* fact;
  std::string rule;
};

std::vector<InertExplanation> inert_explanations(const ProjectAnalysis& analysis) {
  std::vector<InertExplanation> out;
  for (const PracticeFact& fact : analysis.facts) {
    if (!fact.inert) continue;
    // Only annotation-sourced facts can be inert.
    std::string rule =
        "data that stays on the device (or is end-to-end encrypted between "
        "users) does not count as collection, and no unexempted third-party "
        "sharing was declared";
    out.push_back({&fact, std::move(rule)});
  }
  return out;
}

}  // namespace

std::string render_preview(const ProjectAnalysis& analysis, PreviewFormat format) {
  const Taxonomy& tax = analysis.taxonomy;
  const SafetyLabel& label = analysis.label;

  // category id -> rows, preserving taxonomy category order for output.
  std::map<std::string, std::vector<std::pair<DataTypeRef, const LabelRow*>>> by_category;
  for (const auto& [type, row] : label.rows) {
    by_category[type.category_id].emplace_back(type, &row);
  }

  std::ostringstream out;
  const bool html = format == PreviewFormat::Html;
  auto esc = [&](const std::string& s) { return html ? html_escape(s) : s; };

  if (html) {
    out << "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\">\n"
        << "<title>Data safety label preview</title>\n"
        << "<style>\n"
        << "body{font-family:sans-serif;max-width:56em;margin:2em auto;padding:0 1em}\n"
        << "h2{border-bottom:1px solid #ccc;padding-bottom:.2em}\n"
        << ".row{margin:.6em 0;padding:.5em;background:#f7f7f7;border-radius:6px}\n"
        << ".flags{color:#444}\n"
        << ".banner{background:#fff3cd;border:1px solid #ffe69c;padding:.8em;"
        << "border-radius:6px;margin-bottom:1em}\n"
        << ".prov{color:#777;font-size:.85em}\n"
        << "details{margin-top:.3em}\n"
        << "</style></head><body>\n";
    out << "<h1>Data safety label preview</h1>\n";
  } else {
    out << "Data safety label preview\n";
    out << "=========================\n";
  }

  if (!label.pending.empty()) {
    std::string names;
    for (const std::string& id : label.pending) {
      if (!names.empty()) names += ", ";
      const SdkEntry* entry = analysis.kb.entry(id);
      names += entry ? entry->display_name : id;
    }
    if (html) {
      out << "<div class=\"banner\">Export is disabled: verify these libraries in "
          << kCustomUsageFileName << ": " << esc(names) << "</div>\n";
    } else {
      out << "\n!! Export disabled: verify these libraries in " << kCustomUsageFileName
          << ": " << names << "\n";
    }
  }

  if (label.rows.empty()) {
    if (html) out << "<p>No data collected or shared.</p>\n";
    else out << "\nNo data collected or shared.\n";
  }

  for (const auto& category : tax.categories()) {
    auto it = by_category.find(category.id);
    if (it == by_category.end()) continue;
    if (html) out << "<h2>" << esc(category.display) << "</h2>\n";
    else out << "\n" << category.display << "\n" << std::string(category.display.size(), '-')
             << "\n";
    for (const auto& [type, row] : it->second) {
      std::string flags;
      if (row->collected) flags += "collected";
      if (row->shared) flags += flags.empty() ? "shared" : ", shared";
      flags += ", " + row->source_note();
      if (row->ephemeral) flags += ", ephemeral";
      if (row->collected) flags += row->required ? ", required" : ", optional";
      std::string purposes;
      if (!row->collection_purposes.empty())
        purposes += "collected for: " +
                    render_purpose_set(tax, row->collection_purposes, ", ", true);
      if (!row->sharing_purposes.empty()) {
        if (!purposes.empty()) purposes += "; ";
        purposes += "shared for: " +
                    render_purpose_set(tax, row->sharing_purposes, ", ", true);
      }
      if (html) {
        out << "<div class=\"row\"><strong>" << esc(tax.type_display(type))
            << "</strong> <span class=\"flags\">(" << esc(flags) << ")</span>";
        if (!purposes.empty()) out << "<br>" << esc(purposes);
        out << "<details><summary>provenance</summary><ul class=\"prov\">";
        for (const Provenance& p : row->provenance)
          out << "<li>" << esc(p.to_string()) << "</li>";
        out << "</ul></details></div>\n";
      } else {
        out << "  " << tax.type_display(type) << " (" << flags << ")\n";
        if (!purposes.empty()) out << "    " << purposes << "\n";
        for (const Provenance& p : row->provenance)
          out << "    <- " << p.to_string() << "\n";
      }
    }
  }

  auto inert = inert_explanations(analysis);
  if (!inert.empty()) {
    if (html) out << "<h2>Flows not on the label</h2>\n<ul>\n";
    else out << "\nFlows not on the label\n----------------------\n";
    for (const InertExplanation& e : inert) {
      std::string line = tax.type_display(e.fact->data_type) + " (" +
                         e.fact->provenance.to_string() + "): " + e.rule;
      if (html) out << "<li>" << esc(line) << "</li>\n";
      else out << "  " << line << "\n";
    }
    if (html) out << "</ul>\n";
  }

  // Security-practices note.
  bool any_app_collection = false;
  for (const PracticeFact& f : analysis.facts) {
    if (!f.inert && f.collected && f.source.kind == FactSource::Kind::App)
      any_app_collection = true;
  }
  if (any_app_collection) {
    std::string line = label.all_encrypted_in_transit
                           ? "All user data collected by the app is declared encrypted "
                             "in transit."
                           : "Some app-collected data is NOT declared encrypted in "
                             "transit.";
    if (html) out << "<p>" << esc(line) << "</p>\n";
    else out << "\n" << line << "\n";
  }

  if (html) out << "</body></html>\n";
  return out.str();
}

}  // namespace matcha
