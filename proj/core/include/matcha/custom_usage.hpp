#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matcha/diagnostics.hpp"
#include "matcha/sdk_kb.hpp"

namespace matcha {

inline constexpr const char* kCustomUsageFileName = "matcha-libraries.xml";
inline constexpr const char* kCustomUsageRootElement = "matcha-libraries";
inline constexpr int kCustomUsageSchemaVersion = 1;

struct CustomUsageEntry {
  std::string sdk_id;      // lib attribute
  bool verified = false;
  int kb_version = 1;      // KB version the element was generated against
  std::vector<std::string> retained_keys;  // <data key="..."> children
  Span span;               // exact bytes of the element in the document
  std::string xml_path;    // for diagnostics
};

struct CustomUsageDoc {
  std::string text;  // original document, byte-exact
  int schema = kCustomUsageSchemaVersion;
  std::vector<CustomUsageEntry> entries;

  const CustomUsageEntry* entry(const std::string& sdk_id) const;
};

struct XmlParseResult {
  std::optional<CustomUsageDoc> doc;
  std::vector<Diagnostic> diagnostics;
};

/// Parses and structurally validates matcha-libraries.xml against the KB.
/// Unknown lib ids and unknown <data> keys are errors; the doc is still
/// returned with the offending entries dropped so later stages can proceed.
XmlParseResult parse_custom_usage_xml(const std::string& text, const SdkKb& kb,
                                      const std::string& file_label);

struct SyncResult {
  std::string xml;
  std::vector<Diagnostic> diagnostics;
  int added_entries = 0;
};

/// Generates or extends the custom-usage overlay:
///  - matched SDKs with optional practices and no existing element get a new
///    unverified element listing every optional practice;
///  - existing elements are preserved byte-for-byte, in order;
///  - KB practices newer than an element's kb-version produce
///    StaleVerification instead of mutating the file.
SyncResult sync_custom_usage_xml(const std::vector<SdkMatch>& matched,
                                 const std::optional<CustomUsageDoc>& existing,
                                 const SdkKb& kb, const std::string& file_label);

}  // namespace matcha
