#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matcha/label_engine.hpp"

namespace matcha {

/// Canonical CSV: the stable machine-readable contract.
/// Header: category,data_type,collected,shared,ephemeral,required,
///         collection_purposes,sharing_purposes,sources
/// Purposes and sources are semicolon-joined ids; rows sort by category then
/// data type.
std::string render_canonical_csv(const SafetyLabel& label, const Taxonomy& taxonomy);

/// Inverse of render_canonical_csv (ignores provenance, which the CSV does
/// not carry).
std::optional<std::map<DataTypeRef, LabelRow>> parse_canonical_csv(
    const std::string& csv_text, const Taxonomy& taxonomy, std::string* error);

/// Console-format CSV driven by the mapping file, so the emitted question
/// ids can track the external template without code changes.
std::optional<std::string> render_console_csv(const SafetyLabel& label,
                                              const Taxonomy& taxonomy,
                                              const std::string& mapping_json,
                                              std::string* error);

/// JSON twin of the label including provenance.
std::string render_label_json(const SafetyLabel& label, const Taxonomy& taxonomy);

struct ExportResult {
  bool ok = false;
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> written;  // file paths
};

/// Writes data-safety.csv, console.csv, and label.json under out_dir.
/// Refuses with PendingVerification when unverified libraries remain, and
/// with OutstandingErrors when the current diagnostics contain errors.
ExportResult export_label(const SafetyLabel& label, const Taxonomy& taxonomy,
                          const std::string& mapping_path, const std::string& out_dir,
                          const std::vector<Diagnostic>& outstanding);

}  // namespace matcha
