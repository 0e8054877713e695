#include <array>
#include <cctype>
#include <cstring>

#include "matcha/java_parser.hpp"

namespace matcha::java {

namespace {

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

// Multi-char operators, longest first so greedy matching works.
constexpr std::array<const char*, 25> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "==", "!=", "<=", ">=",
    "&&",   "||",  "++",  "--",  "+=", "-=", "*=", "/=", "%=", "&=", "|=",
    "^=",   "<<",  ">>",
};

}  // namespace

LexResult lex(std::string_view src) {
  LexResult out;
  const size_t n = src.size();
  size_t i = 0;
  auto push = [&](TokenKind kind, size_t begin, size_t end) {
    out.tokens.push_back({kind, {static_cast<uint32_t>(begin), static_cast<uint32_t>(end)}});
  };
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v' || c == 0x1A) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      size_t begin = i;
      i += 2;
      while (i < n && src[i] != '\n') ++i;
      out.comments.push_back({{static_cast<uint32_t>(begin), static_cast<uint32_t>(i)},
                              {static_cast<uint32_t>(begin + 2), static_cast<uint32_t>(i)}});
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      size_t begin = i;
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
      size_t inner_end = (i + 1 < n) ? i : n;
      i = (i + 1 < n) ? i + 2 : n;
      out.comments.push_back({{static_cast<uint32_t>(begin), static_cast<uint32_t>(i)},
                              {static_cast<uint32_t>(begin + 2), static_cast<uint32_t>(inner_end)}});
      continue;
    }
    if (c == '"') {
      size_t begin = i;
      // Text block?
      if (i + 2 < n && src[i + 1] == '"' && src[i + 2] == '"') {
        i += 3;
        while (i + 2 < n && !(src[i] == '"' && src[i + 1] == '"' && src[i + 2] == '"')) ++i;
        size_t inner_end = (i + 2 < n) ? i : n;
        i = (i + 2 < n) ? i + 3 : n;
        push(TokenKind::String, begin, i);
        out.strings.push_back({{static_cast<uint32_t>(begin), static_cast<uint32_t>(i)},
                               {static_cast<uint32_t>(begin + 3), static_cast<uint32_t>(inner_end)}});
        continue;
      }
      ++i;
      while (i < n && src[i] != '"' && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n) ++i;
        ++i;
      }
      size_t inner_end = i;
      if (i < n && src[i] == '"') ++i;  // unterminated: stop at EOL/EOF
      push(TokenKind::String, begin, i);
      out.strings.push_back({{static_cast<uint32_t>(begin), static_cast<uint32_t>(i)},
                             {static_cast<uint32_t>(begin + 1), static_cast<uint32_t>(inner_end)}});
      continue;
    }
    if (c == '\'') {
      size_t begin = i;
      ++i;
      while (i < n && src[i] != '\'' && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n) ++i;
        ++i;
      }
      if (i < n && src[i] == '\'') ++i;
      push(TokenKind::CharLit, begin, i);
      continue;
    }
    if (is_ident_start(c)) {
      size_t begin = i;
      while (i < n && is_ident_part(static_cast<unsigned char>(src[i]))) ++i;
      push(TokenKind::Identifier, begin, i);
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      size_t begin = i;
      ++i;
      while (i < n) {
        unsigned char d = static_cast<unsigned char>(src[i]);
        if (std::isalnum(d) || d == '_' || d == '.') {
          ++i;
        } else if ((d == '+' || d == '-') && (src[i - 1] == 'e' || src[i - 1] == 'E')) {
          ++i;  // exponent sign
        } else {
          break;
        }
      }
      push(TokenKind::Number, begin, i);
      continue;
    }
    // Multi-char operators.
    bool matched = false;
    for (const char* op : kOperators) {
      size_t len = std::strlen(op);
      if (src.compare(i, len, op) == 0) {
        push(TokenKind::Punct, i, i + len);
        i += len;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::ispunct(c)) {
      push(TokenKind::Punct, i, i + 1);
      ++i;
      continue;
    }
    push(TokenKind::Unknown, i, i + 1);
    ++i;
  }
  return out;
}

std::string normalize_identifier(std::string_view ident) {
  std::string out;
  out.reserve(ident.size() + 8);
  auto is_lower = [](unsigned char c) { return std::islower(c); };
  auto is_upper = [](unsigned char c) { return std::isupper(c); };
  auto is_digit = [](unsigned char c) { return std::isdigit(c); };
  bool word_open = false;
  for (size_t i = 0; i < ident.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(ident[i]);
    if (!std::isalnum(c)) {
      word_open = false;
      continue;
    }
    if (word_open) {
      // word_open implies ident[i-1] is alnum (non-alnum clears the flag).
      unsigned char prev_raw = static_cast<unsigned char>(ident[i - 1]);
      bool boundary = false;
      if (is_lower(prev_raw) && is_upper(c)) boundary = true;
      else if (is_upper(prev_raw) && is_upper(c) && i + 1 < ident.size() &&
               is_lower(static_cast<unsigned char>(ident[i + 1]))) boundary = true;
      else if (is_digit(prev_raw) != is_digit(c)) boundary = true;
      if (boundary) word_open = false;
    }
    if (!word_open && !out.empty()) out += ' ';
    out += static_cast<char>(std::tolower(c));
    word_open = true;
  }
  return out;
}

}  // namespace matcha::java
