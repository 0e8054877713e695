#include "matcha/java_rewrite.hpp"

#include <algorithm>

#include "matcha/java_parser.hpp"

namespace matcha::java {

namespace {

std::string_view slice(std::string_view source, Span s) {
  return source.substr(s.begin, s.length());
}

std::string line_indent(std::string_view source, uint32_t offset) {
  uint32_t start = offset;
  while (start > 0 && source[start - 1] != '\n') --start;
  uint32_t i = start;
  while (i < source.size() && (source[i] == ' ' || source[i] == '\t')) ++i;
  return std::string(source.substr(start, i - start));
}

bool is_simple_name(const std::string& text) {
  if (text.empty() || std::isdigit(static_cast<unsigned char>(text[0]))) return false;
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '$')
      return false;
  }
  return true;
}

/// The call is the entire statement (modulo the trailing ';').
bool call_is_whole_statement(std::string_view source, const CallSite& call) {
  const Span& stmt = call.enclosing_statement_span;
  if (stmt.empty() || !stmt.contains(call.span)) return false;
  std::string_view text = slice(source, stmt);
  while (!text.empty() &&
         (text.back() == ';' || std::isspace(static_cast<unsigned char>(text.back()))))
    text.remove_suffix(1);
  return text == slice(source, call.span);
}

const VarDeclaration* find_named(const CompilationUnit& unit, const std::string& name,
                                 uint32_t before) {
  const VarDeclaration* best = nullptr;
  const VarDeclaration* any = nullptr;
  for (const auto& d : unit.declarations) {
    if (d.name != name) continue;
    if (!any) any = &d;
    if (d.name_span.begin < before && (!best || d.name_span.begin > best->name_span.begin))
      best = &d;
  }
  return best ? best : any;
}

}  // namespace

std::string fresh_local_name(std::string_view source, const CompilationUnit& unit,
                             InsertKind kind) {
  const char* prefix = kind == InsertKind::Access ? "matchaSrc" : "matchaSink";
  for (int n = 1;; ++n) {
    std::string candidate = prefix + std::to_string(n);
    bool taken = false;
    for (const Span& id : unit.identifiers) {
      if (slice(source, id) == candidate) {
        taken = true;
        break;
      }
    }
    if (!taken) return candidate;
  }
}

InsertionResult apply_annotation_insertion(std::string_view source,
                                           const CompilationUnit& unit,
                                           const VarDeclaration* target,
                                           const CallSite& call,
                                           const std::string& annotation_text,
                                           InsertKind kind) {
  InsertionResult result;
  std::optional<RawAnnotation> parsed = parse_annotation_text(annotation_text);
  if (!parsed) {
    result.no_insertion_point = true;
    result.error = "annotation text does not parse: " + annotation_text;
    return result;
  }

  if (target) {
    // Re-running on an already annotated declaration is a no-op. Java forbids
    // repeating an annotation type, so the name alone decides.
    for (const RawAnnotation& existing : target->annotations) {
      if (existing.name == parsed->name) return result;
    }
    std::string indent = line_indent(source, target->stmt_span.begin);
    if (target->declarator_group_size <= 1) {
      TextEdit edit;
      edit.file_path = unit.file_path;
      edit.replace_range = {target->stmt_span.begin, target->stmt_span.begin};
      edit.new_text = annotation_text + "\n" + indent;
      result.edits.push_back(std::move(edit));
      return result;
    }
    // Split the multi-declarator statement into one declaration per name.
    std::vector<const VarDeclaration*> group;
    for (const auto& d : unit.declarations) {
      if (d.stmt_span == target->stmt_span) group.push_back(&d);
    }
    std::sort(group.begin(), group.end(),
              [](const VarDeclaration* a, const VarDeclaration* b) {
                return a->name_span.begin < b->name_span.begin;
              });
    std::string prefix(slice(
        source, {target->stmt_span.begin, group.front()->name_span.begin}));
    std::string text;
    for (size_t i = 0; i < group.size(); ++i) {
      if (i) text += "\n" + indent;
      if (group[i] == target) text += annotation_text + "\n" + indent;
      text += prefix;
      text += slice(source, group[i]->span);
      text += ";";
    }
    TextEdit edit;
    edit.file_path = unit.file_path;
    edit.replace_range = target->stmt_span;
    edit.new_text = std::move(text);
    result.edits.push_back(std::move(edit));
    return result;
  }

  // No target: extract into a fresh local. Only executable bodies can host a
  // local declaration.
  if (!call.in_executable_body || call.enclosing_statement_span.empty()) {
    result.no_insertion_point = true;
    result.error = "call site cannot host a local declaration";
    return result;
  }
  const Span stmt = call.enclosing_statement_span;
  std::string indent = line_indent(source, stmt.begin);
  std::string fresh = fresh_local_name(source, unit, kind);

  if (call_is_whole_statement(source, call)) {
    // Void-style sink/source: lift the first data argument.
    if (call.arguments.empty()) {
      result.no_insertion_point = true;
      result.error = "call has no argument to extract";
      return result;
    }
    const CallArg& arg = call.arguments.front();
    std::string type_text = "var";
    if (is_simple_name(arg.text)) {
      if (const VarDeclaration* d = find_named(unit, arg.text, call.span.begin)) {
        type_text = d->declared_type_text;
      }
    }
    TextEdit declare;
    declare.file_path = unit.file_path;
    declare.replace_range = {stmt.begin, stmt.begin};
    declare.new_text = annotation_text + "\n" + indent + type_text + " " + fresh +
                       " = " + arg.text + ";\n" + indent;
    TextEdit use;
    use.file_path = unit.file_path;
    use.replace_range = arg.span;
    use.new_text = fresh;
    result.edits.push_back(std::move(declare));
    result.edits.push_back(std::move(use));
    return result;
  }

  // The call is part of a larger expression: lift the call itself.
  TextEdit declare;
  declare.file_path = unit.file_path;
  declare.replace_range = {stmt.begin, stmt.begin};
  declare.new_text = annotation_text + "\n" + indent + "var " + fresh + " = " +
                     std::string(slice(source, call.span)) + ";\n" + indent;
  TextEdit use;
  use.file_path = unit.file_path;
  use.replace_range = call.span;
  use.new_text = fresh;
  result.edits.push_back(std::move(declare));
  result.edits.push_back(std::move(use));
  return result;
}

}  // namespace matcha::java
