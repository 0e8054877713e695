#include "matcha/detectors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <queue>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "matcha/java_parser.hpp"

namespace matcha {

using nlohmann::json;

std::string ApiSpec::terminal_method() const {
  if (is_prefix()) return "";
  auto dot = qualified_pattern.rfind('.');
  return dot == std::string::npos ? qualified_pattern : qualified_pattern.substr(dot + 1);
}

namespace {

std::string read_all(const std::string& path, std::string* error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (error) *error = "cannot open " + path;
    return "";
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<std::vector<DataTypeRef>> parse_type_list(const json& arr,
                                                        const Taxonomy& taxonomy,
                                                        std::string* error,
                                                        const std::string& where) {
  std::vector<DataTypeRef> out;
  for (const auto& t : arr) {
    auto ref = taxonomy.type_by_qualified_id(t.get<std::string>());
    if (!ref) {
      if (error) *error = where + ": unknown data type " + t.get<std::string>();
      return std::nullopt;
    }
    out.push_back(*ref);
  }
  return out;
}

}  // namespace

std::optional<ApiList> ApiList::load_file(const std::string& path, std::string* error) {
  std::string text = read_all(path, error);
  if (text.empty() && error && !error->empty()) return std::nullopt;
  std::string tax_error;
  // The taxonomy is needed to validate type ids; callers load it separately,
  // so this overload re-reads it from the sibling file.
  auto slash = path.find_last_of('/');
  std::string dir = slash == std::string::npos ? "." : path.substr(0, slash);
  auto taxonomy = Taxonomy::load_file(dir + "/taxonomy.json", &tax_error);
  if (!taxonomy) {
    if (error) *error = "api list: " + tax_error;
    return std::nullopt;
  }
  return load_text(text, *taxonomy, error);
}

std::optional<ApiList> ApiList::load_text(const std::string& json_text,
                                          const Taxonomy& taxonomy, std::string* error) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) {
    if (error) *error = "api list: invalid JSON";
    return std::nullopt;
  }
  ApiList list;
  try {
    list.version = doc.at("version").get<int>();
    for (const auto& a : doc.at("apis")) {
      ApiSpec spec;
      spec.qualified_pattern = a.at("pattern").get<std::string>();
      std::string kind = a.at("kind").get<std::string>();
      spec.kind = kind == "TRANSMISSION" ? ApiKind::Transmission : ApiKind::Access;
      if (a.contains("data_types")) {
        auto types = parse_type_list(a["data_types"], taxonomy, error,
                                     spec.qualified_pattern);
        if (!types) return std::nullopt;
        spec.candidate_data_types = std::move(*types);
      }
      if (a.contains("hints")) {
        const auto& h = a["hints"];
        if (h.contains("transmitted_off_device"))
          spec.preset_hints.transmitted_off_device = h["transmitted_off_device"].get<bool>();
        if (h.contains("stored")) spec.preset_hints.stored = h["stored"].get<bool>();
        if (h.contains("shared_with_third_party"))
          spec.preset_hints.shared_with_third_party = h["shared_with_third_party"].get<bool>();
        if (h.contains("encrypted_in_transit"))
          spec.preset_hints.encrypted_in_transit = h["encrypted_in_transit"].get<bool>();
      }
      if (a.contains("notes")) spec.notes = a["notes"].get<std::string>();
      list.apis.push_back(std::move(spec));
    }
  } catch (const json::exception& e) {
    if (error) *error = std::string("api list: ") + e.what();
    return std::nullopt;
  }
  for (const ApiSpec& spec : list.apis) {
    if (spec.is_prefix()) {
      std::string pkg = spec.qualified_pattern;
      pkg.pop_back();
      list.universe.packages.insert(pkg);
    } else {
      list.universe.add_qualified_method(spec.qualified_pattern);
    }
  }
  return list;
}

namespace {

/// Best match of a call against the API list. Exact candidate matches beat
/// prefix matches beat terminal-name (low-confidence) matches.
struct SpecMatch {
  const ApiSpec* spec = nullptr;
  Confidence confidence = Confidence::Low;
  int rank = 3;  // 0 exact, 1 prefix, 2 name-only
};

SpecMatch match_spec(const std::vector<std::string>& candidates,
                     const std::string& method_name, const ApiList& list) {
  SpecMatch best;
  for (const ApiSpec& spec : list.apis) {
    int rank = 3;
    if (spec.is_prefix()) {
      for (const std::string& cand : candidates) {
        if (cand.rfind(spec.qualified_pattern, 0) == 0) {
          rank = 1;
          break;
        }
      }
    } else {
      for (const std::string& cand : candidates) {
        if (cand == spec.qualified_pattern) {
          rank = 0;
          break;
        }
      }
      if (rank == 3 && candidates.empty() && spec.terminal_method() == method_name) {
        rank = 2;
      }
    }
    if (rank < best.rank) {
      best.rank = rank;
      best.spec = &spec;
      best.confidence = rank == 2 ? Confidence::Low : Confidence::High;
    }
  }
  return best;
}

bool declaration_covers(const java::VarDeclaration& decl, ApiKind kind) {
  for (const java::RawAnnotation& ann : decl.annotations) {
    if (kind == ApiKind::Access && is_access_annotation_name(ann.name)) return true;
    if (kind == ApiKind::Transmission && is_transmission_annotation_name(ann.name))
      return true;
  }
  return false;
}

Span covering_annotation_span(const java::VarDeclaration& decl, ApiKind kind) {
  for (const java::RawAnnotation& ann : decl.annotations) {
    if ((kind == ApiKind::Access && is_access_annotation_name(ann.name)) ||
        (kind == ApiKind::Transmission && is_transmission_annotation_name(ann.name)))
      return ann.span;
  }
  return {};
}

}  // namespace

std::vector<DetectedCall> detect_api_calls(
    const std::vector<java::CompilationUnit>& units, const AnnotationGraph& graph,
    const ApiList& api_list) {
  (void)graph;  // coverage is decided by the raw annotations on declarations
  std::vector<DetectedCall> out;
  for (const java::CompilationUnit& unit : units) {
    for (const java::CallSite& call : unit.calls) {
      std::vector<std::string> candidates =
          java::resolve_call_candidates(unit, call, api_list.universe);
      SpecMatch match = match_spec(candidates, call.method_name, api_list);
      if (!match.spec) continue;
      DetectedCall detected;
      detected.unit = &unit;
      detected.call = &call;
      detected.spec = match.spec;
      detected.confidence = match.confidence;
      int target = java::find_covering_declaration_index(unit, call);
      detected.covering_declaration = target;
      if (target >= 0 &&
          declaration_covers(unit.declarations[static_cast<size_t>(target)],
                             match.spec->kind)) {
        detected.coverage = Coverage::Covered;
        detected.covering_annotation = covering_annotation_span(
            unit.declarations[static_cast<size_t>(target)], match.spec->kind);
      }
      out.push_back(detected);
    }
  }
  std::sort(out.begin(), out.end(), [](const DetectedCall& a, const DetectedCall& b) {
    return std::tie(a.unit->file_path, a.call->pos.line, a.call->pos.col) <
           std::tie(b.unit->file_path, b.call->pos.line, b.call->pos.col);
  });
  return out;
}

// ---------------------------------------------------------------- keywords

std::optional<KeywordList> KeywordList::load_file(const std::string& path,
                                                  std::string* error) {
  std::string text = read_all(path, error);
  if (text.empty() && error && !error->empty()) return std::nullopt;
  auto slash = path.find_last_of('/');
  std::string dir = slash == std::string::npos ? "." : path.substr(0, slash);
  std::string tax_error;
  auto taxonomy = Taxonomy::load_file(dir + "/taxonomy.json", &tax_error);
  if (!taxonomy) {
    if (error) *error = "keyword list: " + tax_error;
    return std::nullopt;
  }
  return load_text(text, *taxonomy, error);
}

std::optional<KeywordList> KeywordList::load_text(const std::string& json_text,
                                                  const Taxonomy& taxonomy,
                                                  std::string* error) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) {
    if (error) *error = "keyword list: invalid JSON";
    return std::nullopt;
  }
  KeywordList list;
  try {
    list.version = doc.at("version").get<int>();
    for (const auto& k : doc.at("keywords")) {
      KeywordSpec spec;
      spec.phrase = k.at("phrase").get<std::string>();
      if (k.contains("identifier_form")) {
        spec.identifier_form = k["identifier_form"].get<std::string>();
      } else {
        spec.identifier_form = spec.phrase;
        std::replace(spec.identifier_form.begin(), spec.identifier_form.end(), '_', ' ');
      }
      std::string origin = k.value("origin", "DEFINITION");
      spec.origin = origin == "PERMISSION" ? KeywordOrigin::Permission
                    : origin == "CORPUS"   ? KeywordOrigin::Corpus
                                           : KeywordOrigin::Definition;
      auto types = parse_type_list(k.at("data_types"), taxonomy, error, spec.phrase);
      if (!types) return std::nullopt;
      spec.data_types = std::move(*types);
      list.keywords.push_back(std::move(spec));
    }
  } catch (const json::exception& e) {
    if (error) *error = std::string("keyword list: ") + e.what();
    return std::nullopt;
  }
  return list;
}

namespace {

/// Aho-Corasick automaton over lowercase byte strings; the keyword list is
/// scanned against every identifier/string/comment, so a single linear pass
/// per token beats per-phrase substring search.
class PhraseMatcher {
 public:
  void add(std::string_view phrase, int tag) {
    int node = 0;
    for (unsigned char c : phrase) {
      int next = nodes_[static_cast<size_t>(node)].next[c];
      if (next == 0) {
        next = static_cast<int>(nodes_.size());
        nodes_.emplace_back();  // may reallocate; index first, then write
        nodes_[static_cast<size_t>(node)].next[c] = next;
      }
      node = next;
    }
    nodes_[static_cast<size_t>(node)].tags.push_back(tag);
  }

  void build() {
    std::queue<int> queue;
    for (int c = 0; c < 256; ++c) {
      int next = nodes_[0].next[c];
      if (next) {
        nodes_[static_cast<size_t>(next)].fail = 0;
        queue.push(next);
      }
    }
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop();
      for (int c = 0; c < 256; ++c) {
        int next = nodes_[static_cast<size_t>(node)].next[c];
        if (!next) continue;
        int f = nodes_[static_cast<size_t>(node)].fail;
        while (f && !nodes_[static_cast<size_t>(f)].next[c])
          f = nodes_[static_cast<size_t>(f)].fail;
        nodes_[static_cast<size_t>(next)].fail = nodes_[static_cast<size_t>(f)].next[c];
        if (nodes_[static_cast<size_t>(next)].fail == next)
          nodes_[static_cast<size_t>(next)].fail = 0;
        queue.push(next);
      }
    }
  }

  /// Calls sink(tag, end_index, phrase_len is not provided; callers keep
  /// their own lengths) for every phrase occurrence.
  template <typename Sink>
  void scan(std::string_view text, Sink&& sink) const {
    int node = 0;
    for (size_t i = 0; i < text.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      while (node && !nodes_[static_cast<size_t>(node)].next[c])
        node = nodes_[static_cast<size_t>(node)].fail;
      node = nodes_[static_cast<size_t>(node)].next[c];
      for (int n = node; n; n = nodes_[static_cast<size_t>(n)].fail) {
        for (int tag : nodes_[static_cast<size_t>(n)].tags) sink(tag, i);
      }
    }
  }

 private:
  struct Node {
    std::array<int, 256> next{};
    int fail = 0;
    std::vector<int> tags;
  };
  std::vector<Node> nodes_{1, Node{}};
};

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::vector<KeywordHit> detect_keywords(const std::vector<java::CompilationUnit>& units,
                                        const std::vector<std::string>& sources,
                                        const KeywordList& keywords) {
  PhraseMatcher ident_matcher;
  PhraseMatcher raw_matcher;
  std::vector<size_t> ident_len(keywords.keywords.size());
  std::vector<size_t> raw_len(keywords.keywords.size());
  for (size_t i = 0; i < keywords.keywords.size(); ++i) {
    const KeywordSpec& spec = keywords.keywords[i];
    ident_matcher.add(spec.identifier_form, static_cast<int>(i));
    raw_matcher.add(spec.phrase, static_cast<int>(i));
    ident_len[i] = spec.identifier_form.size();
    raw_len[i] = spec.phrase.size();
  }
  ident_matcher.build();
  raw_matcher.build();

  std::vector<KeywordHit> hits;
  for (size_t ui = 0; ui < units.size(); ++ui) {
    const java::CompilationUnit& unit = units[ui];
    const std::string& src = sources[ui];
    LineIndex lines(src);
    std::set<std::pair<const KeywordSpec*, uint32_t>> seen;

    auto emit = [&](size_t spec_index, Span span, std::string surface,
                    KeywordContext ctx) {
      const KeywordSpec* spec = &keywords.keywords[spec_index];
      if (!seen.emplace(spec, span.begin).second) return;
      KeywordHit hit;
      hit.spec = spec;
      hit.file = unit.file_path;
      hit.span = span;
      hit.pos = lines.locate(span.begin);
      hit.surface_form = std::move(surface);
      hit.context = ctx;
      hits.push_back(std::move(hit));
    };

    for (const Span& id : unit.identifiers) {
      std::string_view raw = std::string_view(src).substr(id.begin, id.length());
      std::string normalized = java::normalize_identifier(raw);
      ident_matcher.scan(normalized, [&](int tag, size_t) {
        emit(static_cast<size_t>(tag), id, std::string(raw), KeywordContext::Identifier);
      });
    }
    auto scan_trivia = [&](const std::vector<java::Trivia>& items, KeywordContext ctx) {
      for (const java::Trivia& item : items) {
        std::string_view raw = std::string_view(src).substr(item.inner.begin,
                                                            item.inner.length());
        std::string lowered = to_lower(raw);
        raw_matcher.scan(lowered, [&](int tag, size_t end_index) {
          size_t len = raw_len[static_cast<size_t>(tag)];
          uint32_t begin = item.inner.begin + static_cast<uint32_t>(end_index + 1 - len);
          Span span{begin, begin + static_cast<uint32_t>(len)};
          emit(static_cast<size_t>(tag), span, std::string(src.substr(span.begin, len)),
               ctx);
        });
      }
    };
    scan_trivia(unit.string_literals, KeywordContext::StringLiteral);
    scan_trivia(unit.comments, KeywordContext::Comment);
  }
  std::sort(hits.begin(), hits.end(), [](const KeywordHit& a, const KeywordHit& b) {
    return std::tie(a.file, a.span.begin, a.spec->phrase) <
           std::tie(b.file, b.span.begin, b.spec->phrase);
  });
  return hits;
}

// ------------------------------------------------------------------ gradle

GradleScan parse_gradle_dependencies(const std::string& gradle_text) {
  static const std::regex dep_re(
      R"(^\s*(implementation|api|compile|compileOnly|runtimeOnly)\s*\(?\s*['"]([^'"]+)['"])");
  static const std::regex dependencies_header_re(R"(^\s*dependencies\s*\{)");
  GradleScan scan;
  std::set<std::string> seen;
  int brace_depth = 0;
  bool in_dependencies = false;
  int dependencies_depth = 0;
  std::istringstream in(gradle_text);
  std::string line;
  while (std::getline(in, line)) {
    std::string stripped = line;
    auto comment = stripped.find("//");
    if (comment != std::string::npos) stripped = stripped.substr(0, comment);
    bool is_header = std::regex_search(stripped, dependencies_header_re);
    bool recognized = false;
    std::smatch m;
    if (std::regex_search(stripped, m, dep_re)) {
      std::string coordinate = m[2].str();
      // Require group:artifact at minimum.
      if (std::count(coordinate.begin(), coordinate.end(), ':') >= 1) {
        recognized = true;
        if (seen.insert(coordinate).second) scan.coordinates.push_back(coordinate);
      }
    }
    if (!recognized && !is_header && in_dependencies && brace_depth >= dependencies_depth) {
      // Any other statement inside the dependencies block may declare an SDK
      // we cannot see (project refs, version-catalog aliases, variables).
      bool has_content = false;
      for (char c : stripped) {
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}' &&
            c != '(' && c != ')' && c != ';') {
          has_content = true;
          break;
        }
      }
      if (has_content) scan.ignored_dependency_lines++;
    }
    for (char c : stripped) {
      if (c == '{') {
        ++brace_depth;
      } else if (c == '}') {
        --brace_depth;
        if (in_dependencies && brace_depth < dependencies_depth) in_dependencies = false;
      }
    }
    if (is_header) {
      in_dependencies = true;
      dependencies_depth = brace_depth;
    }
  }
  return scan;
}

}  // namespace matcha
