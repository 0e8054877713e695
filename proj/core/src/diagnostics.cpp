#include "matcha/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace matcha {

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "info";
}

std::string SourceLoc::to_string() const {
  std::ostringstream out;
  out << file;
  if (!xml_path.empty()) {
    out << ":" << xml_path;
  } else if (line > 0) {
    out << ":" << line << ":" << col;
  }
  return out.str();
}

std::string Diagnostic::render() const {
  std::ostringstream out;
  out << location.to_string() << ": " << severity_name(severity) << " " << code;
  const char* name = code_name(code);
  if (*name) out << " [" << name << "]";
  out << ": " << message;
  return out.str();
}

namespace {

struct CodeInfo {
  const char* code;
  const char* name;
  const char* explainer;
};

constexpr std::array<CodeInfo, 32> kCodeTable{{
    {codes::UncoveredAccessCall, "UncoveredAccessCall",
     "This API call can read user data but no @DataAccess or "
     "@NotPersonalDataAccess annotation covers it. Run `matcha annotate` to "
     "add one, or dismiss the suggestion with @NotPersonalDataAccess."},
    {codes::UncoveredTransmissionCall, "UncoveredTransmissionCall",
     "This API call can send data out of the app but no @DataTransmission or "
     "@NotPersonalDataTransmission annotation covers it. Run `matcha "
     "annotate` to add one."},
    {codes::UnverifiedLibrary, "UnverifiedLibrary",
     "A detected SDK has conditional data practices that need review. Edit "
     "matcha-libraries.xml: keep or remove each <data> element, then set "
     "verified=\"true\" on the library."},
    {codes::KeywordHit, "KeywordHit",
     "A keyword associated with a sensitive data type appears here. Adding "
     "an annotation is voluntary; annotate only if user data is involved."},
    {codes::ConsultGuideline, "ConsultGuideline",
     "A detected SDK is known but its data practices are not bundled. "
     "Consult the vendor guideline and declare practices manually."},
    {codes::DuplicateAccessId, "DuplicateAccessId",
     "Two @DataAccess annotations use the same id. Ids must be unique across "
     "the project so transmissions can reference them."},
    {codes::DanglingAccessId, "DanglingAccessId",
     "A @DataTransmission references an accessId that no @DataAccess "
     "defines."},
    {codes::MissingCollectionPurposes, "MissingCollectionPurposes",
     "Data is transmitted off the device, so at least one COLLECTED_FOR_* "
     "purpose is required."},
    {codes::MissingSharingPurposes, "MissingSharingPurposes",
     "Data is shared with a third party without an exemption, so at least "
     "one SHARED_FOR_* purpose is required."},
    {codes::UnreferencedAccess, "UnreferencedAccess",
     "A @DataAccess id is never referenced by a @DataTransmission, so the "
     "fate of the accessed data is undeclared."},
    {codes::UnusedPurposes, "UnusedPurposes",
     "Purposes are declared on a flow that the label rules exclude, so they "
     "have no effect on the label."},
    {codes::OrphanAnnotation, "OrphanAnnotation",
     "Matcha annotations belong on variable declarations (fields, locals, "
     "or parameters), not on this construct."},
    {codes::UnknownField, "UnknownField", ""},
    {codes::UnknownEnumConstant, "UnknownEnumConstant", ""},
    {codes::MissingBooleanGroup, "MissingBooleanGroup",
     "Each attribute group needs exactly one of its _TRUE/_FALSE constants."},
    {codes::ConflictingBooleanGroup, "ConflictingBooleanGroup",
     "An attribute group contains both its _TRUE and _FALSE constants."},
    {codes::StaleVerification, "StaleVerification",
     "The SDK knowledge base gained practices for a library after it was "
     "verified. Re-review the library entry and re-run `matcha xml`."},
    {codes::MalformedXml, "MalformedXml", ""},
    {codes::UnknownSdkId, "UnknownSdkId", ""},
    {codes::UnknownPracticeKey, "UnknownPracticeKey", ""},
    {codes::SchemaViolation, "SchemaViolation", ""},
    {codes::KbRemoteUnavailable, "KbRemoteUnavailable",
     "The remote SDK knowledge base could not be fetched; the bundled "
     "snapshot was used instead."},
    {codes::ParseGap, "ParseGap",
     "Part of this file could not be parsed and was skipped. Declarations "
     "and calls inside the gap are invisible to detection."},
    {codes::GradleUnrecognized, "GradleUnrecognized",
     "Some dependency-block lines were not recognized. SDKs declared there "
     "may be missed; add them manually to matcha-libraries.xml if needed."},
    {codes::NoInsertionPoint, "NoInsertionPoint",
     "The call sits in a context that cannot host a local declaration, so "
     "an annotation cannot be inserted automatically."},
    {codes::KotlinDslUnsupported, "KotlinDslUnsupported",
     "Kotlin-DSL build scripts and version catalogs are not scanned. Declare "
     "the SDKs manually in matcha-libraries.xml."},
    {codes::MissingRequiredField, "MissingRequiredField", ""},
    {codes::LossyDecode, "LossyDecode",
     "The file is not valid UTF-8; invalid bytes were replaced before "
     "analysis."},
    {codes::InvalidChoice, "InvalidChoice", ""},
    {codes::PendingVerification, "PendingVerification",
     "Export is blocked until every detected library with conditional "
     "practices is verified in matcha-libraries.xml."},
    {codes::OutstandingErrors, "OutstandingErrors",
     "Export is blocked while `matcha check` reports errors."},
    {codes::Explainer, "Explainer", ""},
}};

const CodeInfo* find_code(const std::string& code) {
  for (const auto& info : kCodeTable) {
    if (code == info.code) return &info;
  }
  return nullptr;
}

}  // namespace

const char* code_name(const std::string& code) {
  const CodeInfo* info = find_code(code);
  return info ? info->name : "";
}

const char* code_explainer(const std::string& code) {
  const CodeInfo* info = find_code(code);
  return info ? info->explainer : "";
}

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
  auto key = [](const Diagnostic& d) {
    return std::tie(d.location.file, d.location.line, d.location.col,
                    d.location.xml_path, d.code, d.message);
  };
  return key(a) < key(b);
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), diagnostic_less);
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

}  // namespace matcha
