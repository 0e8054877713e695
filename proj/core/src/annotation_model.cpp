#include "matcha/annotation_model.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace matcha {

namespace {

using java::AnnotationValue;
using java::RawAnnotation;

struct BoolGroup {
  const char* constant;  // "TRANSMITTED_OFF_DEVICE"
  bool CollectionAttributes::*coll_field;
  bool SharingAttributes::*shar_field;
};

constexpr std::array<BoolGroup, 5> kCollectionGroups{{
    {"TRANSMITTED_OFF_DEVICE", &CollectionAttributes::transmitted_off_device, nullptr},
    {"NOT_STORED_IN_BACKEND", &CollectionAttributes::not_stored_in_backend, nullptr},
    {"ENCRYPTED_IN_TRANSIT", &CollectionAttributes::encrypted_in_transit, nullptr},
    {"OPTIONAL_COLLECTION", &CollectionAttributes::optional_collection, nullptr},
    {"USER_TO_USER_ENCRYPTION", &CollectionAttributes::user_to_user_encryption, nullptr},
}};

constexpr std::array<BoolGroup, 6> kSharingGroups{{
    {"SHARED_WITH_THIRD_PARTY", nullptr, &SharingAttributes::shared_with_third_party},
    {"ONLY_SHARED_WITH_SERVICE_PROVIDERS", nullptr,
     &SharingAttributes::only_shared_with_service_providers},
    {"ONLY_SHARED_FOR_LEGAL_PURPOSES", nullptr,
     &SharingAttributes::only_shared_for_legal_purposes},
    {"ONLY_INITIATED_BY_USER", nullptr, &SharingAttributes::only_initiated_by_user},
    {"ONLY_AFTER_GETTING_USER_CONSENT", nullptr,
     &SharingAttributes::only_after_getting_user_consent},
    {"ONLY_TRANSFERRING_ANONYMOUS_DATA", nullptr,
     &SharingAttributes::only_transferring_anonymous_data},
}};

// Purpose constant suffixes in taxonomy order (Purpose enum order).
constexpr std::array<const char*, kPurposeCount> kPurposeSuffixes{
    "APP_FUNCTIONALITY",
    "ANALYTICS",
    "DEVELOPER_COMMUNICATIONS",
    "ADVERTISING_OR_MARKETING",
    "FRAUD_PREVENTION_SECURITY_COMPLIANCE",
    "PERSONALIZATION",
    "ACCOUNT_MANAGEMENT",
};

std::string last_segment(const std::string& path) {
  auto dot = path.rfind('.');
  return dot == std::string::npos ? path : path.substr(dot + 1);
}

std::string second_to_last_segment(const std::string& path) {
  auto dot = path.rfind('.');
  if (dot == std::string::npos) return "";
  auto prev = path.rfind('.', dot - 1);
  return path.substr(prev == std::string::npos ? 0 : prev + 1, dot - (prev == std::string::npos ? 0 : prev + 1));
}

std::vector<const AnnotationValue*> as_list(const AnnotationValue& v) {
  std::vector<const AnnotationValue*> out;
  if (v.kind == AnnotationValue::Kind::Array) {
    for (const auto& item : v.items) out.push_back(&item);
  } else {
    out.push_back(&v);
  }
  return out;
}

struct Lowerer {
  const Taxonomy& taxonomy;
  const SourceLoc& location;
  std::vector<Diagnostic> diags;

  void error(const char* code, std::string message) {
    diags.push_back({Severity::Error, code, std::move(message), location, {}});
  }

  std::optional<AccessAnn> lower_access(const RawAnnotation& raw, bool marker) {
    AccessAnn ann;
    ann.marker = marker;
    ann.location = location;
    ann.span = raw.span;
    if (marker) {
      if (!raw.elements.empty())
        error(codes::UnknownField,
              "@" + raw.name + " is a marker and takes no fields");
      return ann;
    }
    for (const auto& [key, value] : raw.elements) {
      if (key == "id") {
        if (value.kind != AnnotationValue::Kind::String || value.text.empty()) {
          error(codes::MissingRequiredField, "@DataAccess id must be a non-empty string");
        } else {
          ann.id = value.text;
        }
      } else if (key == "dataType") {
        std::set<DataTypeRef> types;
        for (const AnnotationValue* item : as_list(value)) {
          if (item->kind != AnnotationValue::Kind::EnumPath) {
            error(codes::UnknownEnumConstant, "dataType entries must be DataType constants");
            continue;
          }
          std::string enum_name = second_to_last_segment(item->text);
          std::string constant = last_segment(item->text);
          if (!enum_name.empty() && enum_name != "DataType") {
            error(codes::UnknownEnumConstant, "expected DataType constant, got " + item->text);
            continue;
          }
          auto ref = taxonomy.type_by_constant(constant);
          if (!ref) {
            error(codes::UnknownEnumConstant, "unknown data type DataType." + constant);
            continue;
          }
          types.insert(*ref);
        }
        ann.data_types.assign(types.begin(), types.end());
      } else {
        error(codes::UnknownField, "@DataAccess has no field '" + key + "'");
      }
    }
    if (ann.id.empty())
      error(codes::MissingRequiredField, "@DataAccess requires an id");
    if (ann.data_types.empty())
      error(codes::MissingRequiredField, "@DataAccess requires at least one dataType");
    return ann;
  }

  // Parses one constant of an attribute array. Returns true if consumed.
  template <typename Attrs, size_t N>
  bool apply_constant(const std::string& constant, Attrs& attrs,
                      const std::array<BoolGroup, N>& groups,
                      const char* purpose_prefix, PurposeSet& purposes,
                      std::map<std::string, int>& seen) {
    for (const BoolGroup& g : groups) {
      std::string base(g.constant);
      bool value;
      if (constant == base + "_TRUE") value = true;
      else if (constant == base + "_FALSE") value = false;
      else continue;
      int& state = seen[base];
      int bit = value ? 1 : 2;
      if (state & bit) {
        // duplicate of the same constant: tolerated
      } else if (state != 0) {
        error(codes::ConflictingBooleanGroup,
              "both TRUE and FALSE given for " + base);
      }
      state |= bit;
      if constexpr (std::is_same_v<Attrs, CollectionAttributes>) {
        attrs.*(g.coll_field) = value;
      } else {
        attrs.*(g.shar_field) = value;
      }
      return true;
    }
    std::string prefix(purpose_prefix);
    if (constant.rfind(prefix, 0) == 0) {
      std::string suffix = constant.substr(prefix.size());
      for (size_t i = 0; i < kPurposeSuffixes.size(); ++i) {
        if (suffix == kPurposeSuffixes[i]) {
          purposes.insert(static_cast<Purpose>(i));
          return true;
        }
      }
    }
    return false;
  }

  template <typename Attrs, size_t N>
  void lower_attribute_array(const AnnotationValue& value, const char* enum_name,
                             Attrs& attrs, const std::array<BoolGroup, N>& groups,
                             const char* purpose_prefix, PurposeSet& purposes) {
    std::map<std::string, int> seen;
    for (const AnnotationValue* item : as_list(value)) {
      if (item->kind != AnnotationValue::Kind::EnumPath) {
        error(codes::UnknownEnumConstant,
              std::string(enum_name) + " entries must be enum constants");
        continue;
      }
      std::string owner = second_to_last_segment(item->text);
      if (!owner.empty() && owner != enum_name) {
        error(codes::UnknownEnumConstant,
              "expected " + std::string(enum_name) + " constant, got " + item->text);
        continue;
      }
      std::string constant = last_segment(item->text);
      if (!apply_constant(constant, attrs, groups, purpose_prefix, purposes, seen)) {
        error(codes::UnknownEnumConstant,
              "unknown constant " + std::string(enum_name) + "." + constant);
      }
    }
    for (const BoolGroup& g : groups) {
      if (seen.find(g.constant) == seen.end()) {
        error(codes::MissingBooleanGroup,
              std::string(enum_name) + " is missing the " + g.constant + " answer");
      }
    }
  }

  std::optional<TransmissionAnn> lower_transmission(const RawAnnotation& raw, bool marker) {
    TransmissionAnn ann;
    ann.marker = marker;
    ann.location = location;
    ann.span = raw.span;
    if (marker) {
      if (!raw.elements.empty())
        error(codes::UnknownField,
              "@" + raw.name + " is a marker and takes no fields");
      return ann;
    }
    bool saw_collection = false, saw_sharing = false;
    for (const auto& [key, value] : raw.elements) {
      if (key == "accessId") {
        for (const AnnotationValue* item : as_list(value)) {
          if (item->kind != AnnotationValue::Kind::String || item->text.empty()) {
            error(codes::MissingRequiredField, "accessId entries must be non-empty strings");
            continue;
          }
          ann.access_ids.push_back(item->text);
        }
      } else if (key == "collectionAttribute") {
        saw_collection = true;
        lower_attribute_array(value, "CollectionAttribute", ann.collection,
                              kCollectionGroups, "COLLECTED_FOR_",
                              ann.collection.collected_for);
      } else if (key == "sharingAttribute") {
        saw_sharing = true;
        lower_attribute_array(value, "SharingAttribute", ann.sharing, kSharingGroups,
                              "SHARED_FOR_", ann.sharing.shared_for);
      } else {
        error(codes::UnknownField, "@DataTransmission has no field '" + key + "'");
      }
    }
    if (ann.access_ids.empty())
      error(codes::MissingRequiredField, "@DataTransmission requires at least one accessId");
    if (!saw_collection)
      error(codes::MissingRequiredField, "@DataTransmission requires collectionAttribute");
    if (!saw_sharing)
      error(codes::MissingRequiredField, "@DataTransmission requires sharingAttribute");
    return ann;
  }
};

}  // namespace

bool is_matcha_annotation_name(const std::string& name) {
  return is_access_annotation_name(name) || is_transmission_annotation_name(name);
}

bool is_access_annotation_name(const std::string& name) {
  return name == kDataAccessName || name == kNotPersonalDataAccessName;
}

bool is_transmission_annotation_name(const std::string& name) {
  return name == kDataTransmissionName || name == kNotPersonalDataTransmissionName;
}

LowerResult lower_annotation(const java::RawAnnotation& raw, const SourceLoc& location,
                             const Taxonomy& taxonomy) {
  LowerResult result;
  Lowerer lowerer{taxonomy, location, {}};
  if (raw.name == kDataAccessName || raw.name == kNotPersonalDataAccessName) {
    auto ann = lowerer.lower_access(raw, raw.name == kNotPersonalDataAccessName);
    if (ann && lowerer.diags.empty()) result.value = std::move(*ann);
  } else if (raw.name == kDataTransmissionName ||
             raw.name == kNotPersonalDataTransmissionName) {
    auto ann = lowerer.lower_transmission(raw, raw.name == kNotPersonalDataTransmissionName);
    if (ann && lowerer.diags.empty()) result.value = std::move(*ann);
  } else {
    lowerer.error(codes::UnknownField, "not a Matcha annotation: @" + raw.name);
  }
  result.diagnostics = std::move(lowerer.diags);
  return result;
}

std::string render_annotation(const LoweredAnn& ann, const Taxonomy& taxonomy) {
  std::string out;
  if (const auto* access = std::get_if<AccessAnn>(&ann)) {
    if (access->marker) return std::string("@") + kNotPersonalDataAccessName;
    out = std::string("@") + kDataAccessName + "(id = \"" + access->id + "\", dataType = {";
    bool first = true;
    for (const DataTypeRef& ref : access->data_types) {
      if (!first) out += ", ";
      first = false;
      out += "DataType." + taxonomy.type_constant(ref);
    }
    out += "})";
    return out;
  }
  const auto& t = std::get<TransmissionAnn>(ann);
  if (t.marker) return std::string("@") + kNotPersonalDataTransmissionName;
  out = std::string("@") + kDataTransmissionName + "(accessId = {";
  for (size_t i = 0; i < t.access_ids.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + t.access_ids[i] + "\"";
  }
  out += "}, collectionAttribute = {";
  auto bool_constant = [](const char* base, bool v) {
    return std::string("CollectionAttribute.") + base + (v ? "_TRUE" : "_FALSE");
  };
  out += bool_constant("TRANSMITTED_OFF_DEVICE", t.collection.transmitted_off_device);
  out += ", " + bool_constant("NOT_STORED_IN_BACKEND", t.collection.not_stored_in_backend);
  out += ", " + bool_constant("ENCRYPTED_IN_TRANSIT", t.collection.encrypted_in_transit);
  out += ", " + bool_constant("OPTIONAL_COLLECTION", t.collection.optional_collection);
  out += ", " + bool_constant("USER_TO_USER_ENCRYPTION", t.collection.user_to_user_encryption);
  for (Purpose p : t.collection.collected_for) {
    out += std::string(", CollectionAttribute.COLLECTED_FOR_") +
           kPurposeSuffixes[static_cast<size_t>(p)];
  }
  out += "}, sharingAttribute = {";
  auto shar_constant = [](const char* base, bool v) {
    return std::string("SharingAttribute.") + base + (v ? "_TRUE" : "_FALSE");
  };
  out += shar_constant("SHARED_WITH_THIRD_PARTY", t.sharing.shared_with_third_party);
  out += ", " + shar_constant("ONLY_SHARED_WITH_SERVICE_PROVIDERS",
                              t.sharing.only_shared_with_service_providers);
  out += ", " + shar_constant("ONLY_SHARED_FOR_LEGAL_PURPOSES",
                              t.sharing.only_shared_for_legal_purposes);
  out += ", " + shar_constant("ONLY_INITIATED_BY_USER", t.sharing.only_initiated_by_user);
  out += ", " + shar_constant("ONLY_AFTER_GETTING_USER_CONSENT",
                              t.sharing.only_after_getting_user_consent);
  out += ", " + shar_constant("ONLY_TRANSFERRING_ANONYMOUS_DATA",
                              t.sharing.only_transferring_anonymous_data);
  for (Purpose p : t.sharing.shared_for) {
    out += std::string(", SharingAttribute.SHARED_FOR_") +
           kPurposeSuffixes[static_cast<size_t>(p)];
  }
  out += "})";
  (void)taxonomy;
  return out;
}

GraphResult build_graph(const std::vector<LoweredAnn>& annotations) {
  GraphResult result;
  for (const LoweredAnn& ann : annotations) {
    if (const auto* access = std::get_if<AccessAnn>(&ann)) {
      if (access->marker) {
        result.graph.access_markers.push_back(*access);
        continue;
      }
      auto [it, inserted] = result.graph.accesses.emplace(access->id, *access);
      if (!inserted) {
        Diagnostic d{Severity::Error, codes::DuplicateAccessId,
                     "duplicate access id \"" + access->id + "\"; also declared at " +
                         it->second.location.to_string(),
                     access->location,
                     {}};
        result.diagnostics.push_back(std::move(d));
      }
    } else {
      const auto& t = std::get<TransmissionAnn>(ann);
      if (t.marker) result.graph.transmission_markers.push_back(t);
      else result.graph.transmissions.push_back(t);
    }
  }
  for (const TransmissionAnn& t : result.graph.transmissions) {
    for (const std::string& id : t.access_ids) {
      if (!result.graph.accesses.count(id)) {
        result.diagnostics.push_back({Severity::Error, codes::DanglingAccessId,
                                      "accessId \"" + id + "\" does not match any @DataAccess",
                                      t.location,
                                      {}});
      }
    }
  }
  sort_diagnostics(result.diagnostics);
  return result;
}

std::vector<Diagnostic> validate_graph(const AnnotationGraph& graph) {
  std::vector<Diagnostic> diags;
  std::set<std::string> referenced;
  for (const TransmissionAnn& t : graph.transmissions) {
    for (const std::string& id : t.access_ids) referenced.insert(id);
    const bool collects =
        t.collection.transmitted_off_device && !t.collection.user_to_user_encryption;
    const bool shares = t.sharing.shared_with_third_party && !t.sharing.any_exemption();
    if (collects && t.collection.collected_for.empty()) {
      diags.push_back({Severity::Error, codes::MissingCollectionPurposes,
                       "data leaves the device but no collection purpose is declared",
                       t.location,
                       {}});
    }
    if (shares && t.sharing.shared_for.empty()) {
      diags.push_back({Severity::Error, codes::MissingSharingPurposes,
                       "data is shared with a third party but no sharing purpose is declared",
                       t.location,
                       {}});
    }
    if (!collects && !t.collection.collected_for.empty()) {
      diags.push_back({Severity::Warning, codes::UnusedPurposes,
                       "collection purposes have no effect: this flow does not count as "
                       "collection",
                       t.location,
                       {}});
    }
    if (!shares && !t.sharing.shared_for.empty()) {
      diags.push_back({Severity::Warning, codes::UnusedPurposes,
                       "sharing purposes have no effect: this flow does not count as sharing",
                       t.location,
                       {}});
    }
  }
  for (const auto& [id, access] : graph.accesses) {
    if (!referenced.count(id)) {
      diags.push_back({Severity::Warning, codes::UnreferencedAccess,
                       "access \"" + id + "\" is never referenced by a @DataTransmission; "
                       "the fate of this data is undeclared",
                       access.location,
                       {}});
    }
  }
  sort_diagnostics(diags);
  return diags;
}

}  // namespace matcha
