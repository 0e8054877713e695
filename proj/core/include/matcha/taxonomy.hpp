#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace matcha {

/// The seven Google Play data-use purposes. The set is fixed by the label
/// form; display names live in the taxonomy file.
enum class Purpose : uint8_t {
  AppFunctionality = 0,
  Analytics,
  DeveloperCommunications,
  AdvertisingOrMarketing,
  FraudPreventionSecurityCompliance,
  Personalization,
  AccountManagement,
};

inline constexpr int kPurposeCount = 7;

using PurposeSet = std::set<Purpose>;

/// A data type reference: stable snake_case ids, e.g.
/// {"app_activity", "in_app_search_history"}.
struct DataTypeRef {
  std::string category_id;
  std::string type_id;

  std::string qualified() const { return category_id + "." + type_id; }
  auto operator<=>(const DataTypeRef&) const = default;
};

struct DataTypeInfo {
  std::string id;        // snake_case
  std::string display;   // "In-App Search History"
  std::string constant;  // Java enum constant, "InAppSearchHistory"
};

struct CategoryInfo {
  std::string id;
  std::string display;
  std::string constant;
  std::vector<DataTypeInfo> data_types;
};

struct PurposeInfo {
  std::string id;
  std::string display;
  std::string constant;  // "AppFunctionality"
};

/// The versioned data-type/purpose taxonomy, loaded from taxonomy.json.
class Taxonomy {
 public:
  static std::optional<Taxonomy> load_file(const std::string& path, std::string* error);
  static std::optional<Taxonomy> load_text(const std::string& json_text, std::string* error);

  int version() const { return version_; }
  const std::vector<CategoryInfo>& categories() const { return categories_; }
  const std::vector<PurposeInfo>& purposes() const { return purposes_; }

  /// Lookup by the Java enum constant ("InAppSearchHistory").
  std::optional<DataTypeRef> type_by_constant(const std::string& constant) const;
  /// Lookup by "category.type" snake ids.
  std::optional<DataTypeRef> type_by_qualified_id(const std::string& qualified) const;
  bool has_type(const DataTypeRef& ref) const;

  const CategoryInfo* category(const std::string& id) const;
  const DataTypeInfo* type_info(const DataTypeRef& ref) const;

  std::string type_constant(const DataTypeRef& ref) const;
  std::string type_display(const DataTypeRef& ref) const;
  std::string category_display(const std::string& category_id) const;

  std::optional<Purpose> purpose_by_constant(const std::string& constant) const;
  std::optional<Purpose> purpose_by_id(const std::string& id) const;
  const PurposeInfo& purpose_info(Purpose p) const;

  /// All data types in file order, used for exhaustiveness checks.
  std::vector<DataTypeRef> all_types() const;

 private:
  int version_ = 0;
  std::vector<CategoryInfo> categories_;
  std::vector<PurposeInfo> purposes_;
};

std::string purpose_constant(const Taxonomy& tax, Purpose p);
std::string render_purpose_set(const Taxonomy& tax, const PurposeSet& purposes,
                               const std::string& sep, bool display_names);

}  // namespace matcha
