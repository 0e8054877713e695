#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matcha/annotation_model.hpp"
#include "matcha/java_ast.hpp"
#include "matcha/java_resolve.hpp"
#include "matcha/taxonomy.hpp"

namespace matcha {

enum class ApiKind { Access, Transmission };

/// Pre-checked attributes a transmission API implies (Fig-3b-style wizard
/// presets). Absent keys mean "no preset".
struct PresetHints {
  std::optional<bool> transmitted_off_device;
  std::optional<bool> stored;  // true presets NOT_STORED_IN_BACKEND_FALSE
  std::optional<bool> shared_with_third_party;
  std::optional<bool> encrypted_in_transit;
  friend bool operator==(const PresetHints&, const PresetHints&) = default;
};

struct ApiSpec {
  /// Fully-qualified method name, or a package prefix ending in '.'.
  std::string qualified_pattern;
  ApiKind kind = ApiKind::Access;
  std::vector<DataTypeRef> candidate_data_types;  // ACCESS specs
  PresetHints preset_hints;                       // TRANSMISSION specs
  std::string notes;

  bool is_prefix() const { return !qualified_pattern.empty() && qualified_pattern.back() == '.'; }
  std::string terminal_method() const;
};

struct ApiList {
  int version = 0;
  std::vector<ApiSpec> apis;
  java::TypeUniverse universe;  // derived from the patterns

  static std::optional<ApiList> load_file(const std::string& path, std::string* error);
  static std::optional<ApiList> load_text(const std::string& json_text,
                                          const Taxonomy& taxonomy, std::string* error);
};

enum class Confidence { High, Low };
enum class Coverage { Covered, Uncovered };

struct DetectedCall {
  const java::CompilationUnit* unit = nullptr;
  const java::CallSite* call = nullptr;
  const ApiSpec* spec = nullptr;
  Confidence confidence = Confidence::High;
  Coverage coverage = Coverage::Uncovered;
  Span covering_annotation;      // valid when covered
  int covering_declaration = -1; // index into unit->declarations, -1 if none
};

/// Finds calls matching the API list. High confidence comes from resolved
/// candidates; calls with no candidates fall back to terminal-method-name
/// matching at low confidence. Output is sorted by (file, line, col); each
/// call appears at most once.
std::vector<DetectedCall> detect_api_calls(
    const std::vector<java::CompilationUnit>& units, const AnnotationGraph& graph,
    const ApiList& api_list);

enum class KeywordOrigin { Definition, Permission, Corpus };
enum class KeywordContext { Identifier, StringLiteral, Comment };

struct KeywordSpec {
  std::string phrase;            // lowercase, matched in strings/comments
  std::string identifier_form;   // split/lowercased, matched in identifiers
  std::vector<DataTypeRef> data_types;
  KeywordOrigin origin = KeywordOrigin::Definition;
};

struct KeywordList {
  int version = 0;
  std::vector<KeywordSpec> keywords;

  static std::optional<KeywordList> load_file(const std::string& path, std::string* error);
  static std::optional<KeywordList> load_text(const std::string& json_text,
                                              const Taxonomy& taxonomy, std::string* error);
};

struct KeywordHit {
  const KeywordSpec* spec = nullptr;
  std::string file;
  Span span;
  LineCol pos;
  std::string surface_form;
  KeywordContext context = KeywordContext::Identifier;
};

/// Case-insensitive keyword search. Identifiers are split on camelCase /
/// underscore / digit boundaries and rejoined with single spaces before
/// matching; string literals and comments are matched as raw lowercase text.
/// One hit per (spec, location).
std::vector<KeywordHit> detect_keywords(const std::vector<java::CompilationUnit>& units,
                                        const std::vector<std::string>& sources,
                                        const KeywordList& keywords);

struct GradleScan {
  std::vector<std::string> coordinates;  // "group:artifact:version", file order
  int ignored_dependency_lines = 0;
};

/// Extracts maven coordinates from implementation/api/compile/compileOnly/
/// runtimeOnly statements with quoted string notation. Other dependency-block
/// lines are counted, never fatal.
GradleScan parse_gradle_dependencies(const std::string& gradle_text);

}  // namespace matcha
