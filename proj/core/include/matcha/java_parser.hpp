#pragma once

#include <string_view>

#include "matcha/java_ast.hpp"

namespace matcha::java {

struct LexResult {
  std::vector<Token> tokens;
  std::vector<Trivia> comments;
  std::vector<Trivia> strings;
};

/// Total tokenizer: consumes any byte sequence, never fails.
LexResult lex(std::string_view source);

/// Tolerant statement-level parse. Never throws on malformed input; regions
/// it cannot make sense of become parse_gaps.
CompilationUnit parse_unit(std::string_view source, const std::string& file_path);

/// Splits an identifier on camelCase/underscore/digit boundaries and rejoins
/// with single spaces, lowercased: "searchHistoryAdapter" -> "search history
/// adapter". Shared by keyword search and keyword mining.
std::string normalize_identifier(std::string_view identifier);

/// Parses a standalone annotation ("@DataAccess(id = \"q\", ...)").
std::optional<RawAnnotation> parse_annotation_text(std::string_view text);

}  // namespace matcha::java
