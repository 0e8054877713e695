#include "matcha/wizard.hpp"

#include <algorithm>
#include <cctype>

#include "matcha/java_rewrite.hpp"

namespace matcha {

std::vector<WizardStep> build_wizard_steps(const ProjectAnalysis& analysis) {
  std::vector<WizardStep> steps;
  for (const DetectedCall& call : analysis.detected_calls) {
    if (call.coverage == Coverage::Covered) continue;
    WizardStep step;
    step.target = call;
    step.offered_data_types = call.spec->candidate_data_types;
    step.preset_attributes = call.spec->preset_hints;
    steps.push_back(std::move(step));
  }
  return steps;  // detected_calls is already sorted by (file, line, col)
}

std::string suggest_access_id(const ProjectAnalysis& analysis, const WizardStep& step) {
  std::string base;
  for (char c : step.target.call->method_name) {
    if (std::isupper(static_cast<unsigned char>(c)) && !base.empty()) break;
    base += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (base.empty() || base == "get") base = "data";
  for (int n = 1;; ++n) {
    std::string candidate = base + std::to_string(n);
    if (!analysis.graph.accesses.count(candidate)) return candidate;
  }
}

WizardStepResult run_wizard_step(const ProjectAnalysis& analysis, const WizardStep& step,
                                 const WizardChoice& choice) {
  WizardStepResult result;
  const DetectedCall& target = step.target;
  auto invalid = [&](const std::string& message) {
    result.error = Diagnostic{Severity::Error, codes::InvalidChoice, message,
                              {target.unit->file_path, target.call->pos.line,
                               target.call->pos.col, ""},
                              {}};
    return result;
  };

  const bool is_access = target.spec->kind == ApiKind::Access;
  LoweredAnn ann;
  if (choice.dismiss) {
    if (is_access) {
      AccessAnn marker;
      marker.marker = true;
      ann = marker;
    } else {
      TransmissionAnn marker;
      marker.marker = true;
      ann = marker;
    }
  } else if (is_access) {
    AccessAnn access;
    if (choice.selected_types.empty())
      return invalid("select at least one data type or dismiss with n");
    std::set<DataTypeRef> types;
    for (size_t index : choice.selected_types) {
      if (index >= step.offered_data_types.size())
        return invalid("selection " + std::to_string(index + 1) + " is not on the menu");
      types.insert(step.offered_data_types[index]);
    }
    access.data_types.assign(types.begin(), types.end());
    access.id = choice.access_id;
    if (access.id.empty()) return invalid("an access id is required");
    ann = access;
  } else {
    TransmissionAnn t;
    t.access_ids = choice.access_ids;
    if (t.access_ids.empty())
      return invalid("a transmission must reference at least one access id");
    for (const std::string& id : t.access_ids) {
      if (!analysis.graph.accesses.count(id))
        return invalid("accessId \"" + id + "\" does not match any @DataAccess");
    }
    t.collection = choice.collection;
    t.sharing = choice.sharing;
    ann = t;
  }

  result.annotation_text = render_annotation(ann, analysis.taxonomy);
  const java::CompilationUnit& unit = *target.unit;
  const java::VarDeclaration* decl =
      target.covering_declaration >= 0
          ? &unit.declarations[static_cast<size_t>(target.covering_declaration)]
          : nullptr;
  size_t unit_index = static_cast<size_t>(target.unit - analysis.units.data());
  java::InsertionResult insertion = java::apply_annotation_insertion(
      analysis.sources[unit_index], unit, decl, *target.call, result.annotation_text,
      is_access ? java::InsertKind::Access : java::InsertKind::Transmission);
  if (insertion.no_insertion_point) {
    result.error = Diagnostic{Severity::Error, codes::NoInsertionPoint, insertion.error,
                              {unit.file_path, target.call->pos.line,
                               target.call->pos.col, ""},
                              {}};
    return result;
  }
  result.edits = std::move(insertion.edits);
  return result;
}

}  // namespace matcha
