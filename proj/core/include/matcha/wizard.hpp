#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matcha/pipeline.hpp"

namespace matcha {

/// One guided-annotation step for an uncovered detected call. The offered
/// data types are exactly the API spec's candidate set; "none of the above"
/// (dismissal with a marker) is always available.
struct WizardStep {
  DetectedCall target;
  std::vector<DataTypeRef> offered_data_types;  // empty for transmissions
  PresetHints preset_attributes;
};

/// Steps for every uncovered detection, in (file, line, col) order.
std::vector<WizardStep> build_wizard_steps(const ProjectAnalysis& analysis);

struct WizardChoice {
  bool dismiss = false;  // "none of the above" -> marker annotation

  // Access answers.
  std::vector<size_t> selected_types;  // indices into offered_data_types
  std::string access_id;

  // Transmission answers.
  std::vector<std::string> access_ids;
  CollectionAttributes collection;
  SharingAttributes sharing;
};

struct WizardStepResult {
  std::vector<TextEdit> edits;
  std::string annotation_text;
  std::optional<Diagnostic> error;  // InvalidChoice or NoInsertionPoint
};

/// Renders the annotation for `choice` and computes the insertion edits.
/// Preset attributes are defaults only; the choice always wins.
WizardStepResult run_wizard_step(const ProjectAnalysis& analysis, const WizardStep& step,
                                 const WizardChoice& choice);

/// Suggested unique access id for a step ("loc1", "search2", ...).
std::string suggest_access_id(const ProjectAnalysis& analysis, const WizardStep& step);

}  // namespace matcha
