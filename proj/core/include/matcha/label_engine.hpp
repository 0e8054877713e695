#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matcha/annotation_model.hpp"
#include "matcha/custom_usage.hpp"
#include "matcha/sdk_kb.hpp"
#include "matcha/taxonomy.hpp"

namespace matcha {

struct FactSource {
  enum class Kind { App, Sdk };
  Kind kind = Kind::App;
  std::string sdk_id;  // set when kind == Sdk

  std::string tag() const { return kind == Kind::App ? "app" : sdk_id; }
  auto operator<=>(const FactSource&) const = default;
};

struct Provenance {
  enum class Kind { AnnotationSpan, XmlElement, KbPractice };
  Kind kind = Kind::AnnotationSpan;
  std::string file;    // source file or xml file
  uint32_t line = 0;   // annotation spans
  std::string detail;  // xml path or kb practice key

  std::string to_string() const;
  auto operator<=>(const Provenance&) const = default;
};

/// One atomic "data type X is collected/shared with attributes A from source
/// S" assertion.
struct PracticeFact {
  DataTypeRef data_type;
  bool collected = false;
  bool shared = false;
  bool ephemeral = false;
  bool optional = false;
  bool encrypted_in_transit = false;
  PurposeSet collection_purposes;
  PurposeSet sharing_purposes;
  FactSource source;
  Provenance provenance;
  bool inert = false;  // neither collected nor shared; kept for the preview
};

/// Google's definitions applied to one transmission:
/// collected = transmitted off device and not end-to-end user encrypted.
bool collection_counts(const CollectionAttributes& c);
/// shared = shared with a third party and no exemption applies.
bool sharing_counts(const SharingAttributes& s);

/// One fact per (transmission, cited access, data type). Inert flows are
/// emitted flagged so the preview can explain why they are off the label.
std::vector<PracticeFact> facts_from_annotations(const AnnotationGraph& graph);

struct SdkFactsResult {
  std::vector<PracticeFact> facts;
  std::vector<Diagnostic> diagnostics;  // UnverifiedLibrary, ConsultGuideline
};

/// Always-practices of matched SDKs apply unconditionally; optional practices
/// apply only when retained in a verified overlay entry.
SdkFactsResult facts_from_sdks(const std::vector<SdkMatch>& matched,
                               const std::optional<CustomUsageDoc>& doc);

struct LabelRow {
  bool collected = false;
  bool shared = false;
  bool ephemeral = false;
  bool required = false;
  PurposeSet collection_purposes;
  PurposeSet sharing_purposes;
  std::set<std::string> sources;  // "app" and/or sdk ids
  std::vector<Provenance> provenance;

  /// "by app", "by library", or "by app and library".
  std::string source_note() const;
};

struct SafetyLabel {
  std::map<DataTypeRef, LabelRow> rows;
  bool all_encrypted_in_transit = true;  // over collecting app facts
  std::vector<std::string> pending;      // unverified sdk ids blocking export
};

SafetyLabel merge_label(const std::vector<PracticeFact>& facts);

struct RowFieldChange {
  std::string field;
  std::string before;
  std::string after;
};

struct LabelDiff {
  std::vector<DataTypeRef> added;
  std::vector<DataTypeRef> removed;
  std::map<DataTypeRef, std::vector<RowFieldChange>> changed;
  std::vector<RowFieldChange> global;  // e.g. all_encrypted_in_transit

  bool empty() const {
    return added.empty() && removed.empty() && changed.empty() && global.empty();
  }
};

/// Structural diff ignoring provenance. diff(a, b) mirrors diff(b, a).
LabelDiff diff_labels(const SafetyLabel& a, const SafetyLabel& b);

}  // namespace matcha
