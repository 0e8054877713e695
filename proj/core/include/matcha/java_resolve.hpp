#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "matcha/java_ast.hpp"

namespace matcha::java {

/// What the resolver knows about the outside world, derived from the API
/// list: fully-qualified class names and the packages they live in. There is
/// no classpath; this is import-heuristic resolution only.
struct TypeUniverse {
  std::set<std::string> classes;   // "android.location.LocationManager"
  std::set<std::string> packages;  // "android.location"
  // method name -> fully qualified methods, for static-wildcard imports.
  std::map<std::string, std::set<std::string>> static_methods;

  void add_qualified_method(const std::string& qualified_method);
};

/// Candidate fully-qualified method names for a call, using (a) the receiver
/// variable's declared type resolved through explicit imports, (b) wildcard
/// imports expanded against known packages, (c) static imports. Deduplicated
/// and sorted; empty when nothing matches.
std::vector<std::string> resolve_call_candidates(const CompilationUnit& unit,
                                                 const CallSite& call,
                                                 const TypeUniverse& known);

/// The declaration an annotation for `call` should target, in priority order:
/// (1) the local/field whose initializer contains the call, (2) the in-file
/// local/field declaration of a simple-name argument, (3) none. Parameters
/// are not insertion targets; the wizard extracts instead.
const VarDeclaration* find_covering_declaration(const CompilationUnit& unit,
                                                const CallSite& call);

/// Index variant of find_covering_declaration (-1 when none).
int find_covering_declaration_index(const CompilationUnit& unit, const CallSite& call);

}  // namespace matcha::java
