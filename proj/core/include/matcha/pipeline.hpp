#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matcha/annotation_model.hpp"
#include "matcha/config.hpp"
#include "matcha/custom_usage.hpp"
#include "matcha/detectors.hpp"
#include "matcha/label_engine.hpp"
#include "matcha/sdk_kb.hpp"

namespace matcha {

struct CheckOptions {
  std::string project_root;
  ProjectConfig config;
  std::string data_dir;          // empty = locate_data_dir()
  bool offline = false;          // --offline or MATCHA_NO_NETWORK
  std::string kb_url_override;   // --kb-url
  bool enable_explainers = true; // first-run Info diagnostics + state file
  KbFetcher kb_fetcher;          // test hook
};

/// Everything one analysis pass produces. DetectedCall/SdkMatch elements
/// point into units/api_list/kb, so the struct is move-only.
struct ProjectAnalysis {
  ProjectAnalysis() = default;
  ProjectAnalysis(ProjectAnalysis&&) = default;
  ProjectAnalysis& operator=(ProjectAnalysis&&) = default;
  ProjectAnalysis(const ProjectAnalysis&) = delete;
  ProjectAnalysis& operator=(const ProjectAnalysis&) = delete;

  std::string project_root;
  std::vector<std::string> source_files;  // sorted relative paths
  std::vector<std::string> sources;       // file contents, parallel to units
  std::vector<java::CompilationUnit> units;

  Taxonomy taxonomy;
  ApiList api_list;
  KeywordList keyword_list;
  SdkKb kb;
  std::string console_mapping_path;

  AnnotationGraph graph;
  std::vector<DetectedCall> detected_calls;
  std::vector<KeywordHit> keyword_hits;
  std::vector<std::string> coordinates;
  std::vector<SdkMatch> matched_sdks;
  std::optional<CustomUsageDoc> custom_usage;
  std::vector<PracticeFact> facts;  // including inert
  SafetyLabel label;

  std::vector<Diagnostic> diagnostics;  // sorted
  int exit_code = 0;  // 0 clean, 1 errors, 2 usage/IO failure
  std::string fatal_error;  // set when exit_code == 2
};

/// The whole batch pipeline: parse, detect, build the annotation graph,
/// match SDKs, check the XML overlay, and build the label.
ProjectAnalysis run_check(const CheckOptions& options);

/// Ordered (file, line, col) list of the four Matcha annotations paired with
/// the declaration they adorn; orphaned ones are reported via diagnostics.
struct CollectedAnnotation {
  const java::CompilationUnit* unit = nullptr;
  const java::RawAnnotation* annotation = nullptr;
  int declaration_index = -1;
};
std::vector<CollectedAnnotation> collect_matcha_annotations(
    const std::vector<java::CompilationUnit>& units, std::vector<Diagnostic>* diagnostics);

/// Process-level project lock (.matcha/lock). Released on destruction.
class ProjectLock {
 public:
  static std::optional<ProjectLock> acquire(const std::string& project_root,
                                            std::string* error);
  ~ProjectLock();
  ProjectLock(ProjectLock&&) noexcept;
  ProjectLock& operator=(ProjectLock&&) noexcept;
  ProjectLock(const ProjectLock&) = delete;

 private:
  explicit ProjectLock(std::string path) : path_(std::move(path)) {}
  std::string path_;
};

}  // namespace matcha
