#include "matcha/java_resolve.hpp"

#include <algorithm>

namespace matcha::java {

namespace {

bool is_simple_name(const std::string& text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '$')
      return false;
  }
  return !std::isdigit(static_cast<unsigned char>(text[0]));
}

std::string last_segment(const std::string& qualified) {
  auto dot = qualified.rfind('.');
  return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

/// Base type name of a declared type: strips generics, arrays, and leading
/// qualifiers are kept ("a.b.C<T>[]" -> "a.b.C").
std::string base_type(const std::string& declared) {
  std::string out;
  for (char c : declared) {
    if (c == '<' || c == '[') break;
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    out += c;
  }
  return out;
}

/// Nearest declaration of `name` before `before_offset`; falls back to any
/// declaration of that name in the file.
const VarDeclaration* find_named_declaration(const CompilationUnit& unit,
                                             const std::string& name,
                                             uint32_t before_offset) {
  const VarDeclaration* best = nullptr;
  const VarDeclaration* any = nullptr;
  for (const auto& d : unit.declarations) {
    if (d.name != name) continue;
    if (!any) any = &d;
    if (d.name_span.begin < before_offset &&
        (!best || d.name_span.begin > best->name_span.begin)) {
      best = &d;
    }
  }
  return best ? best : any;
}

}  // namespace

void TypeUniverse::add_qualified_method(const std::string& qm) {
  auto last_dot = qm.rfind('.');
  if (last_dot == std::string::npos || last_dot == 0) return;
  std::string cls = qm.substr(0, last_dot);
  std::string method = qm.substr(last_dot + 1);
  classes.insert(cls);
  static_methods[method].insert(qm);
  auto cls_dot = cls.rfind('.');
  if (cls_dot != std::string::npos) packages.insert(cls.substr(0, cls_dot));
}

std::vector<std::string> resolve_call_candidates(const CompilationUnit& unit,
                                                 const CallSite& call,
                                                 const TypeUniverse& known) {
  std::set<std::string> candidates;

  auto resolve_type_name = [&](const std::string& type_name) -> std::vector<std::string> {
    std::vector<std::string> out;
    if (type_name.empty()) return out;
    if (type_name.find('.') != std::string::npos) {
      // Already qualified, or a nested path like Settings.Secure: resolve the
      // first segment through imports, keep the rest.
      auto dot = type_name.find('.');
      std::string head = type_name.substr(0, dot);
      std::string rest = type_name.substr(dot);
      for (const Import& imp : unit.imports) {
        if (!imp.wildcard && !imp.is_static && last_segment(imp.qualified_name) == head) {
          out.push_back(imp.qualified_name + rest);
        }
      }
      if (known.classes.count(type_name)) out.push_back(type_name);
      return out;
    }
    for (const Import& imp : unit.imports) {
      if (imp.is_static) continue;
      if (!imp.wildcard && last_segment(imp.qualified_name) == type_name) {
        out.push_back(imp.qualified_name);
      } else if (imp.wildcard) {
        std::string guess = imp.qualified_name + "." + type_name;
        if (known.classes.count(guess)) out.push_back(guess);
      }
    }
    return out;
  };

  const std::string& recv = call.receiver_text;
  if (recv.empty()) {
    // Bare call: explicit static import, or static-wildcard + known method.
    for (const Import& imp : unit.imports) {
      if (!imp.is_static) continue;
      if (!imp.wildcard && last_segment(imp.qualified_name) == call.method_name) {
        candidates.insert(imp.qualified_name);
      } else if (imp.wildcard) {
        auto it = known.static_methods.find(call.method_name);
        if (it != known.static_methods.end()) {
          for (const std::string& qm : it->second) {
            if (qm.rfind(imp.qualified_name + ".", 0) == 0 &&
                qm.substr(imp.qualified_name.size() + 1) == call.method_name) {
              candidates.insert(qm);
            }
          }
        }
      }
    }
  } else if (recv != "new") {
    std::vector<std::string> types;
    if (is_simple_name(recv)) {
      // (a) receiver variable's declared type
      if (const VarDeclaration* decl =
              find_named_declaration(unit, recv, call.span.begin)) {
        types = resolve_type_name(base_type(decl->declared_type_text));
      }
      // The receiver may itself be an imported type (static call).
      for (std::string& t : resolve_type_name(recv)) types.push_back(std::move(t));
    } else {
      // Dotted receiver: a qualified or nested type reference.
      types = resolve_type_name(recv);
    }
    for (const std::string& type : types) {
      candidates.insert(type + "." + call.method_name);
    }
  }

  std::vector<std::string> out(candidates.begin(), candidates.end());
  return out;  // std::set is already sorted and deduplicated
}

int find_covering_declaration_index(const CompilationUnit& unit, const CallSite& call) {
  // (1) declaration whose initializer contains the call; innermost wins.
  int best = -1;
  uint32_t best_len = 0;
  for (size_t i = 0; i < unit.declarations.size(); ++i) {
    const auto& d = unit.declarations[i];
    if (d.kind == DeclKind::Parameter) continue;
    if (d.initializer_span && d.initializer_span->contains(call.span)) {
      uint32_t len = d.initializer_span->length();
      if (best < 0 || len < best_len) {
        best = static_cast<int>(i);
        best_len = len;
      }
    }
  }
  if (best >= 0) return best;
  // (2) in-file local/field declaration of a simple-name argument.
  for (const CallArg& arg : call.arguments) {
    if (!is_simple_name(arg.text)) continue;
    const VarDeclaration* named = find_named_declaration(unit, arg.text, call.span.begin);
    if (named && named->kind != DeclKind::Parameter) {
      return static_cast<int>(named - unit.declarations.data());
    }
  }
  return -1;
}

const VarDeclaration* find_covering_declaration(const CompilationUnit& unit,
                                                const CallSite& call) {
  int idx = find_covering_declaration_index(unit, call);
  return idx < 0 ? nullptr : &unit.declarations[static_cast<size_t>(idx)];
}

}  // namespace matcha::java
