#include "matcha/pipeline.hpp"

#include <algorithm>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "matcha/datafiles.hpp"
#include "matcha/java_parser.hpp"
#include "matcha/text.hpp"

#ifdef __unix__
#include <unistd.h>
#endif

namespace matcha {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bool skip_dir(const std::string& name) {
  return name == "build" || name == ".git" || name == ".matcha" || name == ".gradle" ||
         name == "matcha-out";
}

std::vector<std::string> discover_files(const std::string& root,
                                        const std::vector<std::string>& source_roots,
                                        const std::string& extension) {
  std::set<std::string> found;
  for (const std::string& source_root : source_roots) {
    fs::path base = fs::path(root) / source_root;
    std::error_code ec;
    if (!fs::exists(base, ec)) continue;
    fs::recursive_directory_iterator it(base, fs::directory_options::skip_permission_denied,
                                        ec);
    fs::recursive_directory_iterator end;
    for (; it != end; it.increment(ec)) {
      if (ec) break;
      const fs::directory_entry& entry = *it;
      if (entry.is_directory(ec)) {
        if (skip_dir(entry.path().filename().string())) it.disable_recursion_pending();
        continue;
      }
      if (!entry.is_regular_file(ec)) continue;
      if (entry.path().filename().string().size() < extension.size()) continue;
      std::string name = entry.path().filename().string();
      if (name.size() >= extension.size() &&
          name.compare(name.size() - extension.size(), extension.size(), extension) == 0) {
        found.insert(fs::relative(entry.path(), root, ec).generic_string());
      }
    }
  }
  return {found.begin(), found.end()};
}

struct ParsedFile {
  std::string path;  // relative
  std::string text;
  java::CompilationUnit unit;
  bool lossy = false;
};

std::vector<ParsedFile> parse_files(const std::string& root,
                                    const std::vector<std::string>& files) {
  std::vector<ParsedFile> out(files.size());
  auto worker = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      out[i].path = files[i];
      auto content = read_text_file((fs::path(root) / files[i]).string());
      if (!content) continue;
      out[i].text = std::move(content->text);
      out[i].lossy = content->lossy;
      out[i].unit = java::parse_unit(out[i].text, files[i]);
      out[i].unit.lossy_decode = out[i].lossy;
    }
  };
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  size_t chunk = std::max<size_t>(1, (files.size() + hw - 1) / hw);
  std::vector<std::future<void>> futures;
  for (size_t begin = 0; begin < files.size(); begin += chunk) {
    size_t end = std::min(files.size(), begin + chunk);
    futures.push_back(std::async(std::launch::async, worker, begin, end));
  }
  for (auto& f : futures) f.get();
  return out;
}

std::string severity_source_for_call(const DetectedCall& call) {
  return call.spec->kind == ApiKind::Access ? codes::UncoveredAccessCall
                                            : codes::UncoveredTransmissionCall;
}

// First-run explainer state, tracked per project in .matcha/seen-codes.json.
std::set<std::string> load_seen_codes(const std::string& root) {
  std::set<std::string> seen;
  std::ifstream in(fs::path(root) / ".matcha" / "seen-codes.json");
  if (!in) return seen;
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) return seen;
  for (const auto& code : doc) {
    if (code.is_string()) seen.insert(code.get<std::string>());
  }
  return seen;
}

void store_seen_codes(const std::string& root, const std::set<std::string>& seen) {
  std::error_code ec;
  fs::create_directories(fs::path(root) / ".matcha", ec);
  json doc = json::array();
  for (const std::string& code : seen) doc.push_back(code);
  write_file_atomic((fs::path(root) / ".matcha" / "seen-codes.json").string(),
                    doc.dump(2) + "\n");
}

}  // namespace

std::vector<CollectedAnnotation> collect_matcha_annotations(
    const std::vector<java::CompilationUnit>& units,
    std::vector<Diagnostic>* diagnostics) {
  std::vector<CollectedAnnotation> out;
  for (const java::CompilationUnit& unit : units) {
    for (const java::AnnotationSite& site : unit.raw_annotations) {
      if (!is_matcha_annotation_name(site.annotation.name)) continue;
      if (site.host == java::AnnotationHost::Declaration && site.declaration_index >= 0) {
        out.push_back({&unit, &site.annotation, site.declaration_index});
      } else if (diagnostics) {
        diagnostics->push_back(
            {Severity::Error, codes::OrphanAnnotation,
             "@" + site.annotation.name + " must adorn a variable declaration",
             {unit.file_path, 0, 0, ""},
             {}});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CollectedAnnotation& a, const CollectedAnnotation& b) {
              const auto& da = a.unit->declarations[static_cast<size_t>(a.declaration_index)];
              const auto& db = b.unit->declarations[static_cast<size_t>(b.declaration_index)];
              return std::tie(a.unit->file_path, da.pos.line, da.pos.col) <
                     std::tie(b.unit->file_path, db.pos.line, db.pos.col);
            });
  return out;
}

ProjectAnalysis run_check(const CheckOptions& options) {
  ProjectAnalysis analysis;
  analysis.project_root = options.project_root;
  auto fatal = [&](const std::string& message) {
    analysis.fatal_error = message;
    analysis.exit_code = 2;
    return std::move(analysis);
  };

  std::error_code ec;
  if (!fs::is_directory(options.project_root, ec))
    return fatal("project root does not exist: " + options.project_root);

  std::string data_dir = options.data_dir.empty() ? locate_data_dir() : options.data_dir;
  if (data_dir.empty())
    return fatal("cannot locate the bundled data directory; set MATCHA_DATA_DIR");
  DataPaths paths = resolve_data_paths(data_dir, options.config, options.project_root);
  analysis.console_mapping_path = paths.console_mapping;

  std::string error;
  auto taxonomy = Taxonomy::load_file(paths.taxonomy, &error);
  if (!taxonomy) return fatal(error);
  analysis.taxonomy = std::move(*taxonomy);

  {
    std::ifstream in(paths.api_list, std::ios::binary);
    if (!in) return fatal("cannot open " + paths.api_list);
    std::stringstream buf;
    buf << in.rdbuf();
    auto api = ApiList::load_text(buf.str(), analysis.taxonomy, &error);
    if (!api) return fatal(error);
    analysis.api_list = std::move(*api);
  }
  {
    std::ifstream in(paths.keyword_list, std::ios::binary);
    if (!in) return fatal("cannot open " + paths.keyword_list);
    std::stringstream buf;
    buf << in.rdbuf();
    auto kw = KeywordList::load_text(buf.str(), analysis.taxonomy, &error);
    if (!kw) return fatal(error);
    analysis.keyword_list = std::move(*kw);
  }

  // ---- sources -------------------------------------------------------------
  analysis.source_files =
      discover_files(options.project_root, options.config.source_roots, ".java");
  std::vector<std::string> gradle_files = options.config.gradle_files;
  if (gradle_files.empty()) {
    gradle_files =
        discover_files(options.project_root, options.config.source_roots, "build.gradle");
    if (gradle_files.empty())
      gradle_files = discover_files(options.project_root, {"."}, "build.gradle");
  }
  std::vector<std::string> kts =
      discover_files(options.project_root, {"."}, "build.gradle.kts");
  if (analysis.source_files.empty() && gradle_files.empty() && kts.empty())
    return fatal("no source files or gradle files under " + options.project_root);

  std::vector<Diagnostic>& diags = analysis.diagnostics;
  for (const std::string& file : kts) {
    diags.push_back({Severity::Warning, codes::KotlinDslUnsupported,
                     "Kotlin-DSL build script is not scanned; declare SDKs manually",
                     {file, 0, 0, ""},
                     {}});
  }

  std::vector<ParsedFile> parsed = parse_files(options.project_root, analysis.source_files);
  for (ParsedFile& file : parsed) {
    if (file.lossy) {
      diags.push_back({Severity::Warning, codes::LossyDecode,
                       "file is not valid UTF-8; invalid bytes replaced",
                       {file.path, 0, 0, ""},
                       {}});
    }
    LineIndex lines(file.text);
    for (const Span& gap : file.unit.parse_gaps) {
      LineCol at = lines.locate(gap.begin);
      diags.push_back({Severity::Warning, codes::ParseGap,
                       "unparsable region skipped (" + std::to_string(gap.length()) +
                           " bytes); declarations inside are invisible",
                       {file.path, at.line, at.col, ""},
                       {}});
    }
    analysis.sources.push_back(std::move(file.text));
    analysis.units.push_back(std::move(file.unit));
  }

  // ---- annotations and graph -------------------------------------------
  std::vector<LoweredAnn> lowered;
  for (const CollectedAnnotation& item : collect_matcha_annotations(analysis.units, &diags)) {
    const auto& decl =
        item.unit->declarations[static_cast<size_t>(item.declaration_index)];
    SourceLoc loc{item.unit->file_path, decl.pos.line, decl.pos.col, ""};
    LowerResult res = lower_annotation(*item.annotation, loc, analysis.taxonomy);
    for (Diagnostic& d : res.diagnostics) diags.push_back(std::move(d));
    if (res.value) lowered.push_back(std::move(*res.value));
  }
  GraphResult graph_result = build_graph(lowered);
  analysis.graph = std::move(graph_result.graph);
  for (Diagnostic& d : graph_result.diagnostics) diags.push_back(std::move(d));
  for (Diagnostic& d : validate_graph(analysis.graph)) diags.push_back(std::move(d));

  // ---- detection ---------------------------------------------------------
  analysis.detected_calls =
      detect_api_calls(analysis.units, analysis.graph, analysis.api_list);
  for (const DetectedCall& call : analysis.detected_calls) {
    if (call.coverage == Coverage::Covered) continue;
    Severity severity =
        call.confidence == Confidence::High ? Severity::Error : Severity::Warning;
    std::string kind_word =
        call.spec->kind == ApiKind::Access ? "accesses user data" : "transmits data";
    std::string msg = call.call->method_name + " potentially " + kind_word +
                      " and no annotation covers it; run `matcha annotate`";
    if (call.confidence == Confidence::Low) msg += " (name-only match, low confidence)";
    diags.push_back({severity, severity_source_for_call(call), msg,
                     {call.unit->file_path, call.call->pos.line, call.call->pos.col, ""},
                     {}});
  }

  analysis.keyword_hits =
      detect_keywords(analysis.units, analysis.sources, analysis.keyword_list);
  for (const KeywordHit& hit : analysis.keyword_hits) {
    std::string types;
    for (const DataTypeRef& t : hit.spec->data_types) {
      if (!types.empty()) types += ", ";
      types += analysis.taxonomy.type_display(t);
    }
    const char* ctx = hit.context == KeywordContext::Identifier     ? "identifier"
                      : hit.context == KeywordContext::StringLiteral ? "string"
                                                                     : "comment";
    diags.push_back({Severity::Info, codes::KeywordHit,
                     "keyword \"" + hit.spec->phrase + "\" (" + ctx + " \"" +
                         hit.surface_form + "\") relates to: " + types +
                         "; annotating is voluntary",
                     {hit.file, hit.pos.line, hit.pos.col, ""},
                     {}});
  }

  // ---- gradle and SDKs -----------------------------------------------------
  for (const std::string& gradle_file : gradle_files) {
    auto content = read_text_file((fs::path(options.project_root) / gradle_file).string());
    if (!content) continue;
    GradleScan scan = parse_gradle_dependencies(content->text);
    for (const std::string& coordinate : scan.coordinates) {
      if (std::find(analysis.coordinates.begin(), analysis.coordinates.end(), coordinate) ==
          analysis.coordinates.end())
        analysis.coordinates.push_back(coordinate);
    }
    if (scan.ignored_dependency_lines > 0) {
      diags.push_back({Severity::Info, codes::GradleUnrecognized,
                       std::to_string(scan.ignored_dependency_lines) +
                           " dependency-block line(s) not recognized; SDKs declared "
                           "there may be missed",
                       {gradle_file, 0, 0, ""},
                       {}});
    }
  }

  const bool offline = options.offline || options.config.offline;
  std::string remote_url = options.kb_url_override.empty() ? options.config.kb_remote_url
                                                           : options.kb_url_override;
  KbLoadResult kb_result =
      load_kb(paths.kb, remote_url, offline, analysis.taxonomy, options.kb_fetcher);
  for (Diagnostic& d : kb_result.diagnostics) diags.push_back(std::move(d));
  if (!kb_result.kb) return fatal("bundled SDK knowledge base failed to load");
  analysis.kb = std::move(*kb_result.kb);

  analysis.matched_sdks = match_sdks(analysis.coordinates, analysis.kb);

  // ---- custom usage overlay -------------------------------------------
  fs::path overlay_path = fs::path(options.project_root) / kCustomUsageFileName;
  if (fs::exists(overlay_path, ec)) {
    auto content = read_text_file(overlay_path.string());
    if (content) {
      XmlParseResult parsed_xml =
          parse_custom_usage_xml(content->text, analysis.kb, kCustomUsageFileName);
      for (Diagnostic& d : parsed_xml.diagnostics) diags.push_back(std::move(d));
      analysis.custom_usage = std::move(parsed_xml.doc);
    }
  }
  {
    // Dry-run sync: reports StaleVerification without writing anything.
    SyncResult sync = sync_custom_usage_xml(analysis.matched_sdks, analysis.custom_usage,
                                            analysis.kb, kCustomUsageFileName);
    for (Diagnostic& d : sync.diagnostics) diags.push_back(std::move(d));
  }

  // ---- facts and label -------------------------------------------------
  analysis.facts = facts_from_annotations(analysis.graph);
  SdkFactsResult sdk_facts = facts_from_sdks(analysis.matched_sdks, analysis.custom_usage);
  std::set<std::string> pending;
  for (const Diagnostic& d : sdk_facts.diagnostics) {
    if (d.code == codes::UnverifiedLibrary) {
      // The sdk id is identifiable from the matched list; recover it.
      for (const SdkMatch& m : analysis.matched_sdks) {
        if (d.message.rfind(m.entry->display_name, 0) == 0) pending.insert(m.entry->sdk_id);
      }
    }
  }
  for (Diagnostic& d : sdk_facts.diagnostics) diags.push_back(std::move(d));
  for (PracticeFact& f : sdk_facts.facts) analysis.facts.push_back(std::move(f));
  analysis.label = merge_label(analysis.facts);
  analysis.label.pending.assign(pending.begin(), pending.end());

  // ---- explainers -------------------------------------------------------
  if (options.enable_explainers) {
    std::set<std::string> seen = load_seen_codes(options.project_root);
    std::set<std::string> new_codes;
    for (const Diagnostic& d : diags) {
      if (seen.count(d.code) || new_codes.count(d.code)) continue;
      const char* text = code_explainer(d.code);
      if (!*text) continue;
      new_codes.insert(d.code);
    }
    for (const std::string& code : new_codes) {
      diags.push_back({Severity::Info, codes::Explainer,
                       std::string(code_name(code)) + ": " + code_explainer(code),
                       {"", 0, 0, ""},
                       {}});
      seen.insert(code);
    }
    if (!new_codes.empty()) store_seen_codes(options.project_root, seen);
  }

  sort_diagnostics(diags);
  analysis.exit_code = has_errors(diags) ? 1 : 0;
  return analysis;
}

// ------------------------------------------------------------- ProjectLock

std::optional<ProjectLock> ProjectLock::acquire(const std::string& project_root,
                                                std::string* error) {
  std::error_code ec;
  fs::path dir = fs::path(project_root) / ".matcha";
  fs::create_directories(dir, ec);
  fs::path lock_path = dir / "lock";
  if (fs::exists(lock_path, ec)) {
    std::ifstream in(lock_path);
    long pid = 0;
    in >> pid;
#ifdef __unix__
    if (pid > 0 && kill(static_cast<pid_t>(pid), 0) == 0) {
      if (error)
        *error = "another matcha process (pid " + std::to_string(pid) +
                 ") owns this project";
      return std::nullopt;
    }
#endif
    // Stale lock: fall through and take it over.
  }
  std::ofstream out(lock_path, std::ios::trunc);
  if (!out) {
    if (error) *error = "cannot create " + lock_path.string();
    return std::nullopt;
  }
#ifdef __unix__
  out << getpid() << "\n";
#else
  out << 0 << "\n";
#endif
  return ProjectLock(lock_path.string());
}

ProjectLock::~ProjectLock() {
  if (!path_.empty()) {
    std::error_code ec;
    fs::remove(path_, ec);
  }
}

ProjectLock::ProjectLock(ProjectLock&& other) noexcept : path_(std::move(other.path_)) {
  other.path_.clear();
}

ProjectLock& ProjectLock::operator=(ProjectLock&& other) noexcept {
  if (this != &other) {
    path_ = std::move(other.path_);
    other.path_.clear();
  }
  return *this;
}

}  // namespace matcha
