#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matcha/java_ast.hpp"
#include "matcha/text.hpp"

namespace matcha::java {

enum class InsertKind { Access, Transmission };

struct InsertionResult {
  std::vector<TextEdit> edits;  // empty means no-op (already annotated)
  bool no_insertion_point = false;
  std::string error;  // set when no_insertion_point
};

/// Computes the edits that place `annotation_text` on the right declaration
/// for `call`:
///  - target with declarator_group_size > 1: the statement is first split
///    into one declaration per name;
///  - no target: the call (or, for void sinks, its first data argument) is
///    extracted into a fresh matchaSrcN/matchaSinkN local;
///  - re-running on the edited source is a no-op.
InsertionResult apply_annotation_insertion(std::string_view source,
                                           const CompilationUnit& unit,
                                           const VarDeclaration* target,
                                           const CallSite& call,
                                           const std::string& annotation_text,
                                           InsertKind kind);

/// Next free matchaSrcN / matchaSinkN name for this unit.
std::string fresh_local_name(std::string_view source, const CompilationUnit& unit,
                             InsertKind kind);

}  // namespace matcha::java
