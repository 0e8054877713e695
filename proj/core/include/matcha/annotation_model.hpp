#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matcha/diagnostics.hpp"
#include "matcha/java_ast.hpp"
#include "matcha/taxonomy.hpp"

namespace matcha {

inline constexpr const char* kDataAccessName = "DataAccess";
inline constexpr const char* kNotPersonalDataAccessName = "NotPersonalDataAccess";
inline constexpr const char* kDataTransmissionName = "DataTransmission";
inline constexpr const char* kNotPersonalDataTransmissionName = "NotPersonalDataTransmission";

bool is_matcha_annotation_name(const std::string& name);
bool is_access_annotation_name(const std::string& name);
bool is_transmission_annotation_name(const std::string& name);

struct CollectionAttributes {
  bool transmitted_off_device = false;
  bool not_stored_in_backend = false;
  bool encrypted_in_transit = false;
  bool optional_collection = false;
  bool user_to_user_encryption = false;
  PurposeSet collected_for;
  friend bool operator==(const CollectionAttributes&, const CollectionAttributes&) = default;
};

struct SharingAttributes {
  bool shared_with_third_party = false;
  bool only_shared_with_service_providers = false;
  bool only_shared_for_legal_purposes = false;
  bool only_initiated_by_user = false;
  bool only_after_getting_user_consent = false;
  bool only_transferring_anonymous_data = false;
  PurposeSet shared_for;

  bool any_exemption() const {
    return only_shared_with_service_providers || only_shared_for_legal_purposes ||
           only_initiated_by_user || only_after_getting_user_consent ||
           only_transferring_anonymous_data;
  }
  friend bool operator==(const SharingAttributes&, const SharingAttributes&) = default;
};

struct AccessAnn {
  bool marker = false;  // @NotPersonalDataAccess
  std::string id;
  std::vector<DataTypeRef> data_types;  // kept sorted, unique
  SourceLoc location;
  Span span;
  friend bool operator==(const AccessAnn& a, const AccessAnn& b) {
    return a.marker == b.marker && a.id == b.id && a.data_types == b.data_types;
  }
};

struct TransmissionAnn {
  bool marker = false;  // @NotPersonalDataTransmission
  std::vector<std::string> access_ids;
  CollectionAttributes collection;
  SharingAttributes sharing;
  SourceLoc location;
  Span span;
  friend bool operator==(const TransmissionAnn& a, const TransmissionAnn& b) {
    return a.marker == b.marker && a.access_ids == b.access_ids &&
           a.collection == b.collection && a.sharing == b.sharing;
  }
};

using LoweredAnn = std::variant<AccessAnn, TransmissionAnn>;

struct LowerResult {
  std::optional<LoweredAnn> value;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return value.has_value() && diagnostics.empty(); }
};

/// Maps a RawAnnotation to the typed model. Boolean attributes arrive as
/// paired enum constants (FOO_TRUE / FOO_FALSE); exactly one per group must
/// be present. Purposes arrive as COLLECTED_FOR_* / SHARED_FOR_* constants.
LowerResult lower_annotation(const java::RawAnnotation& raw, const SourceLoc& location,
                             const Taxonomy& taxonomy);

/// Renders a lowered annotation back to canonical Java text (the inverse of
/// lower_annotation up to formatting).
std::string render_annotation(const LoweredAnn& ann, const Taxonomy& taxonomy);

struct AnnotationGraph {
  std::map<std::string, AccessAnn> accesses;
  std::vector<TransmissionAnn> transmissions;
  std::vector<AccessAnn> access_markers;
  std::vector<TransmissionAnn> transmission_markers;
};

struct GraphResult {
  AnnotationGraph graph;
  std::vector<Diagnostic> diagnostics;  // DuplicateAccessId, DanglingAccessId
};

GraphResult build_graph(const std::vector<LoweredAnn>& annotations);

/// Consistency diagnostics over a structurally valid graph:
///  - Error: off-device transmission (not user-to-user encrypted) without
///    collection purposes;
///  - Error: unexempted third-party sharing without sharing purposes;
///  - Warning: access id never referenced by a transmission;
///  - Warning: purposes declared on flows the label rules exclude.
std::vector<Diagnostic> validate_graph(const AnnotationGraph& graph);

}  // namespace matcha
