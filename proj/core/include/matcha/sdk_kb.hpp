#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matcha/diagnostics.hpp"
#include "matcha/taxonomy.hpp"

namespace matcha {

enum class PracticeRole { Collect, Share };

struct SdkPractice {
  std::string key;  // stable per entry, referenced by <data key="...">
  DataTypeRef data_type;
  PracticeRole role = PracticeRole::Collect;
  PurposeSet purposes;
  bool ephemeral = false;
  bool optional = false;
  std::string condition_text;  // trigger condition for optional practices
  int since = 1;               // KB version that introduced this practice
};

struct SdkEntry {
  std::string sdk_id;
  std::string display_name;
  std::vector<std::string> maven_patterns;  // anchored regexes
  std::vector<SdkPractice> always_practices;
  std::vector<SdkPractice> optional_practices;
  std::string guideline_url;
  bool practices_known = false;
  bool transport_encryption_attested = false;

  const SdkPractice* optional_practice(const std::string& key) const;
  bool needs_verification() const { return !optional_practices.empty(); }
};

struct SdkKb {
  int version = 0;
  std::vector<SdkEntry> entries;

  const SdkEntry* entry(const std::string& sdk_id) const;
};

/// Returns the response body, or nullopt on any failure.
using KbFetcher = std::function<std::optional<std::string>(const std::string& url)>;

struct KbLoadResult {
  std::optional<SdkKb> kb;
  std::vector<Diagnostic> diagnostics;
  bool from_remote = false;
};

/// Offline-first: the bundled snapshot always loads; when `remote_url` is a
/// reachable HTTPS endpoint (and offline is false), the fetched document
/// replaces the snapshot after schema validation. Remote failures degrade to
/// the snapshot with a diagnostic, never abort.
KbLoadResult load_kb(const std::string& bundled_path, const std::string& remote_url,
                     bool offline, const Taxonomy& taxonomy, KbFetcher fetcher = {});

/// Schema-validated parse of a KB document. Violations are reported with a
/// field-level path ("entries[3].maven_patterns") at the given severity.
std::optional<SdkKb> parse_kb_text(const std::string& json_text, const Taxonomy& taxonomy,
                                   const std::string& source_label,
                                   Severity violation_severity,
                                   std::vector<Diagnostic>* diagnostics);

struct SdkMatch {
  const SdkEntry* entry = nullptr;
  std::string coordinate;  // the coordinate that matched
};

/// A coordinate matches an entry when any pattern, applied as an anchored
/// regex over the full group:artifact:version string, matches. Each entry is
/// reported at most once; output is sorted by sdk_id.
std::vector<SdkMatch> match_sdks(const std::vector<std::string>& coordinates,
                                 const SdkKb& kb);

const char* practice_role_name(PracticeRole role);
std::optional<PracticeRole> practice_role_from(const std::string& name);

}  // namespace matcha
