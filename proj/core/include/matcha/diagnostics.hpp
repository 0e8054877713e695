#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matcha/text.hpp"

namespace matcha {

enum class Severity { Info, Warning, Error };

const char* severity_name(Severity s);

/// Where a diagnostic points. Either a file position (line/col may be 0 for
/// whole-file diagnostics) or an XML path inside a config file.
struct SourceLoc {
  std::string file;
  uint32_t line = 0;
  uint32_t col = 0;
  std::string xml_path;  // set instead of line/col for XML locations

  std::string to_string() const;
  friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

struct Diagnostic {
  Severity severity = Severity::Info;
  std::string code;     // stable, e.g. "MATCHA001"
  std::string message;
  SourceLoc location;
  std::vector<TextEdit> suggested_fix;  // empty when there is no fix

  std::string render() const;
};

// Stable diagnostic codes. Numbers never change meaning across releases.
namespace codes {
inline constexpr const char* UncoveredAccessCall = "MATCHA001";
inline constexpr const char* UncoveredTransmissionCall = "MATCHA002";
inline constexpr const char* UnverifiedLibrary = "MATCHA003";
inline constexpr const char* KeywordHit = "MATCHA004";
inline constexpr const char* ConsultGuideline = "MATCHA005";
inline constexpr const char* DuplicateAccessId = "MATCHA006";
inline constexpr const char* DanglingAccessId = "MATCHA007";
inline constexpr const char* MissingCollectionPurposes = "MATCHA008";
inline constexpr const char* MissingSharingPurposes = "MATCHA009";
inline constexpr const char* UnreferencedAccess = "MATCHA010";
inline constexpr const char* UnusedPurposes = "MATCHA011";
inline constexpr const char* OrphanAnnotation = "MATCHA012";
inline constexpr const char* UnknownField = "MATCHA013";
inline constexpr const char* UnknownEnumConstant = "MATCHA014";
inline constexpr const char* MissingBooleanGroup = "MATCHA015";
inline constexpr const char* ConflictingBooleanGroup = "MATCHA016";
inline constexpr const char* StaleVerification = "MATCHA017";
inline constexpr const char* MalformedXml = "MATCHA018";
inline constexpr const char* UnknownSdkId = "MATCHA019";
inline constexpr const char* UnknownPracticeKey = "MATCHA020";
inline constexpr const char* SchemaViolation = "MATCHA021";
inline constexpr const char* KbRemoteUnavailable = "MATCHA022";
inline constexpr const char* ParseGap = "MATCHA023";
inline constexpr const char* GradleUnrecognized = "MATCHA024";
inline constexpr const char* NoInsertionPoint = "MATCHA025";
inline constexpr const char* KotlinDslUnsupported = "MATCHA026";
inline constexpr const char* MissingRequiredField = "MATCHA027";
inline constexpr const char* LossyDecode = "MATCHA028";
inline constexpr const char* InvalidChoice = "MATCHA029";
inline constexpr const char* PendingVerification = "MATCHA030";
inline constexpr const char* OutstandingErrors = "MATCHA031";
inline constexpr const char* Explainer = "MATCHA100";
}  // namespace codes

/// Short human name of a code ("UncoveredAccessCall"), or "" if unknown.
const char* code_name(const std::string& code);

/// One-paragraph first-run explanation for a code, or "" if none is written.
const char* code_explainer(const std::string& code);

/// Deterministic ordering: (file, line, col, xml_path, code, message).
bool diagnostic_less(const Diagnostic& a, const Diagnostic& b);

void sort_diagnostics(std::vector<Diagnostic>& diags);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace matcha
