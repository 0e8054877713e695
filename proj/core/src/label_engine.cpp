#include "matcha/label_engine.hpp"

#include <algorithm>
#include <sstream>

namespace matcha {

std::string Provenance::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::AnnotationSpan:
      out << file << ":" << line;
      break;
    case Kind::XmlElement:
      out << file << ":" << detail;
      break;
    case Kind::KbPractice:
      out << "kb:" << detail;
      break;
  }
  return out.str();
}

bool collection_counts(const CollectionAttributes& c) {
  return c.transmitted_off_device && !c.user_to_user_encryption;
}

bool sharing_counts(const SharingAttributes& s) {
  return s.shared_with_third_party && !s.any_exemption();
}

std::vector<PracticeFact> facts_from_annotations(const AnnotationGraph& graph) {
  std::vector<PracticeFact> facts;
  for (const TransmissionAnn& t : graph.transmissions) {
    const bool collected = collection_counts(t.collection);
    const bool shared = sharing_counts(t.sharing);
    for (const std::string& id : t.access_ids) {
      auto it = graph.accesses.find(id);
      if (it == graph.accesses.end()) continue;  // graph errors reported earlier
      for (const DataTypeRef& type : it->second.data_types) {
        PracticeFact fact;
        fact.data_type = type;
        fact.collected = collected;
        fact.shared = shared;
        fact.ephemeral = t.collection.not_stored_in_backend;
        fact.optional = t.collection.optional_collection;
        fact.encrypted_in_transit = t.collection.encrypted_in_transit;
        fact.collection_purposes = t.collection.collected_for;
        fact.sharing_purposes = t.sharing.shared_for;
        fact.source.kind = FactSource::Kind::App;
        fact.provenance.kind = Provenance::Kind::AnnotationSpan;
        fact.provenance.file = t.location.file;
        fact.provenance.line = t.location.line;
        fact.inert = !collected && !shared;
        facts.push_back(std::move(fact));
      }
    }
  }
  return facts;
}

namespace {

PracticeFact fact_from_practice(const SdkEntry& entry, const SdkPractice& practice,
                                Provenance provenance) {
  PracticeFact fact;
  fact.data_type = practice.data_type;
  fact.collected = practice.role == PracticeRole::Collect;
  fact.shared = practice.role == PracticeRole::Share;
  fact.ephemeral = practice.ephemeral;
  fact.optional = practice.optional;
  fact.encrypted_in_transit = entry.transport_encryption_attested;
  if (fact.collected) fact.collection_purposes = practice.purposes;
  if (fact.shared) fact.sharing_purposes = practice.purposes;
  fact.source.kind = FactSource::Kind::Sdk;
  fact.source.sdk_id = entry.sdk_id;
  fact.provenance = std::move(provenance);
  return fact;
}

}  // namespace

SdkFactsResult facts_from_sdks(const std::vector<SdkMatch>& matched,
                               const std::optional<CustomUsageDoc>& doc) {
  SdkFactsResult result;
  for (const SdkMatch& match : matched) {
    const SdkEntry& entry = *match.entry;
    if (!entry.practices_known) {
      std::string where = entry.guideline_url.empty()
                              ? "the vendor's data-safety guideline"
                              : entry.guideline_url;
      result.diagnostics.push_back(
          {Severity::Warning, codes::ConsultGuideline,
           entry.display_name + " (" + match.coordinate +
               ") is detected but its practices are not bundled; consult " + where,
           {match.coordinate, 0, 0, ""},
           {}});
      continue;
    }
    for (const SdkPractice& practice : entry.always_practices) {
      Provenance prov;
      prov.kind = Provenance::Kind::KbPractice;
      prov.detail = entry.sdk_id + "/" + practice.key;
      result.facts.push_back(fact_from_practice(entry, practice, std::move(prov)));
    }
    if (!entry.needs_verification()) continue;
    const CustomUsageEntry* overlay = doc ? doc->entry(entry.sdk_id) : nullptr;
    if (!overlay || !overlay->verified) {
      result.diagnostics.push_back(
          {Severity::Error, codes::UnverifiedLibrary,
           entry.display_name + " has conditional data practices; review " +
               std::string(kCustomUsageFileName) + " and set verified=\"true\"",
           {kCustomUsageFileName, 0, 0,
            overlay ? overlay->xml_path : "/" + std::string(kCustomUsageRootElement)},
           {}});
      continue;
    }
    for (const std::string& key : overlay->retained_keys) {
      const SdkPractice* practice = entry.optional_practice(key);
      if (!practice) continue;  // reported by the XML parse
      Provenance prov;
      prov.kind = Provenance::Kind::XmlElement;
      prov.file = kCustomUsageFileName;
      prov.detail = overlay->xml_path + "/data[@key='" + key + "']";
      result.facts.push_back(fact_from_practice(entry, *practice, std::move(prov)));
    }
  }
  sort_diagnostics(result.diagnostics);
  return result;
}

std::string LabelRow::source_note() const {
  bool app = sources.count("app") > 0;
  bool library = false;
  for (const std::string& s : sources)
    if (s != "app") library = true;
  if (app && library) return "by app and library";
  if (library) return "by library";
  return "by app";
}

SafetyLabel merge_label(const std::vector<PracticeFact>& facts) {
  SafetyLabel label;
  for (const PracticeFact& fact : facts) {
    if (fact.inert || (!fact.collected && !fact.shared)) continue;
    LabelRow& row = label.rows[fact.data_type];
    if (fact.collected) {
      // ephemeral is an AND over collecting facts; required when any
      // collecting fact is non-optional.
      row.ephemeral = row.collected ? (row.ephemeral && fact.ephemeral) : fact.ephemeral;
      if (!fact.optional) row.required = true;
      row.collected = true;
      for (Purpose p : fact.collection_purposes) row.collection_purposes.insert(p);
      if (fact.source.kind == FactSource::Kind::App && !fact.encrypted_in_transit)
        label.all_encrypted_in_transit = false;
    }
    if (fact.shared) {
      row.shared = true;
      for (Purpose p : fact.sharing_purposes) row.sharing_purposes.insert(p);
    }
    row.sources.insert(fact.source.tag());
    row.provenance.push_back(fact.provenance);
  }
  for (auto& [type, row] : label.rows) {
    std::sort(row.provenance.begin(), row.provenance.end());
    row.provenance.erase(std::unique(row.provenance.begin(), row.provenance.end()),
                         row.provenance.end());
  }
  return label;
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string purposes_str(const PurposeSet& purposes) {
  std::string out;
  for (Purpose p : purposes) {
    if (!out.empty()) out += ";";
    out += std::to_string(static_cast<int>(p));
  }
  return out;
}

std::string sources_str(const std::set<std::string>& sources) {
  std::string out;
  for (const std::string& s : sources) {
    if (!out.empty()) out += ";";
    out += s;
  }
  return out;
}

void compare_rows(const DataTypeRef& type, const LabelRow& a, const LabelRow& b,
                  LabelDiff* diff) {
  std::vector<RowFieldChange> changes;
  auto field = [&](const char* name, const std::string& va, const std::string& vb) {
    if (va != vb) changes.push_back({name, va, vb});
  };
  field("collected", bool_str(a.collected), bool_str(b.collected));
  field("shared", bool_str(a.shared), bool_str(b.shared));
  field("ephemeral", bool_str(a.ephemeral), bool_str(b.ephemeral));
  field("required", bool_str(a.required), bool_str(b.required));
  field("collection_purposes", purposes_str(a.collection_purposes),
        purposes_str(b.collection_purposes));
  field("sharing_purposes", purposes_str(a.sharing_purposes),
        purposes_str(b.sharing_purposes));
  field("sources", sources_str(a.sources), sources_str(b.sources));
  if (!changes.empty()) diff->changed[type] = std::move(changes);
}

}  // namespace

LabelDiff diff_labels(const SafetyLabel& a, const SafetyLabel& b) {
  LabelDiff diff;
  for (const auto& [type, row] : a.rows) {
    auto it = b.rows.find(type);
    if (it == b.rows.end()) diff.removed.push_back(type);
    else compare_rows(type, row, it->second, &diff);
  }
  for (const auto& [type, row] : b.rows) {
    if (!a.rows.count(type)) diff.added.push_back(type);
  }
  if (a.all_encrypted_in_transit != b.all_encrypted_in_transit) {
    diff.global.push_back({"all_encrypted_in_transit",
                           bool_str(a.all_encrypted_in_transit),
                           bool_str(b.all_encrypted_in_transit)});
  }
  return diff;
}

}  // namespace matcha
