#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matcha/text.hpp"

namespace matcha::java {

enum class TokenKind : uint8_t {
  Identifier,
  Number,
  String,      // "..." or """...""" text block
  CharLit,
  Punct,       // operators and punctuation, possibly multi-char
  Unknown,     // bytes the lexer could not classify
};

struct Token {
  TokenKind kind = TokenKind::Unknown;
  Span span;
};

/// Lexical trivia kept out of the parse stream but needed by keyword search.
struct Trivia {
  Span span;       // full span including delimiters
  Span inner;      // content without delimiters
};

/// A value inside an annotation: string literal, enum-constant path, or a
/// (possibly nested) array of values.
struct AnnotationValue {
  enum class Kind { String, EnumPath, Array };
  Kind kind = Kind::String;
  std::string text;                    // decoded string / dotted path
  std::vector<AnnotationValue> items;  // for Array
  friend bool operator==(const AnnotationValue&, const AnnotationValue&) = default;
};

struct RawAnnotation {
  std::string name;  // simple name after '@'
  std::vector<std::pair<std::string, AnnotationValue>> elements;  // unique names
  Span span;

  const AnnotationValue* element(const std::string& name) const {
    for (const auto& [k, v] : elements)
      if (k == name) return &v;
    return nullptr;
  }
};

enum class DeclKind : uint8_t { Local, Field, Parameter };

struct VarDeclaration {
  std::string name;
  std::string declared_type_text;
  Span span;            // the declarator: name through its initializer
  Span name_span;
  Span stmt_span;       // whole declaration statement including ';'
  LineCol pos;          // of the name
  std::vector<RawAnnotation> annotations;
  std::optional<Span> initializer_span;
  uint32_t declarator_group_size = 1;
  DeclKind kind = DeclKind::Local;
};

struct CallArg {
  std::string text;
  Span span;
};

struct CallSite {
  std::string method_name;
  std::string receiver_text;  // "" for bare calls, "new" for constructors
  std::vector<CallArg> arguments;
  Span span;  // receiver start through closing ')'
  LineCol pos;
  Span enclosing_statement_span;
  bool in_executable_body = false;  // method/ctor/initializer-block body
  std::vector<std::string> qualified_candidates;  // filled by resolution
};

struct Import {
  std::string qualified_name;  // without the trailing ".*"
  bool wildcard = false;
  bool is_static = false;
};

/// Where an annotation ended up attached. The four Matcha annotations are only
/// valid on variable declarations; anything else is an orphan.
enum class AnnotationHost : uint8_t { Declaration, TypeDecl, Method, Other };

struct AnnotationSite {
  RawAnnotation annotation;
  AnnotationHost host = AnnotationHost::Other;
  int declaration_index = -1;  // into CompilationUnit::declarations when host==Declaration
};

struct CompilationUnit {
  std::string file_path;
  std::optional<std::string> package_name;
  std::vector<Import> imports;
  std::vector<VarDeclaration> declarations;
  std::vector<CallSite> calls;
  std::vector<AnnotationSite> raw_annotations;
  std::vector<Span> parse_gaps;  // non-overlapping, sorted
  bool lossy_decode = false;

  // Token-level material for keyword search and TF-IDF.
  std::vector<Span> identifiers;
  std::vector<Trivia> string_literals;
  std::vector<Trivia> comments;
};

}  // namespace matcha::java
