#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "matcha/java_parser.hpp"
#include "matcha/text.hpp"

namespace matcha::java {

namespace {

const std::set<std::string_view> kModifiers = {
    "public", "private", "protected", "static", "final", "abstract",
    "native", "synchronized", "transient", "volatile", "strictfp",
    "default", "sealed",
};

const std::set<std::string_view> kStatementKeywords = {
    "if", "else", "for", "while", "do", "switch", "case", "break", "continue",
    "return", "try", "catch", "finally", "throw", "new", "this", "super",
    "instanceof", "assert", "yield", "package", "import", "extends",
    "implements", "throws", "void", "class", "interface", "enum", "record",
};

const std::set<std::string_view> kPrimitiveTypes = {
    "int", "long", "short", "byte", "char", "boolean", "float", "double", "var",
};

bool is_type_start_word(std::string_view w) {
  if (kPrimitiveTypes.count(w)) return true;
  return !kStatementKeywords.count(w) && !kModifiers.count(w);
}

class Parser {
 public:
  Parser(std::string_view src, const std::string& file_path)
      : src_(src), lines_(src) {
    LexResult lexed = lex(src);
    toks_ = std::move(lexed.tokens);
    unit_.file_path = file_path;
    unit_.comments = std::move(lexed.comments);
    unit_.string_literals = std::move(lexed.strings);
    for (const Token& t : toks_) {
      if (t.kind == TokenKind::Identifier) unit_.identifiers.push_back(t.span);
    }
  }

  CompilationUnit run() {
    parse_top_level();
    normalize_gaps();
    return std::move(unit_);
  }

 private:
  // ---- token access -------------------------------------------------------

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& cur() const { return toks_[pos_]; }
  std::string_view text(const Token& t) const {
    return src_.substr(t.span.begin, t.span.length());
  }
  std::string_view cur_text() const { return at_end() ? std::string_view{} : text(cur()); }
  bool cur_is(std::string_view s) const { return !at_end() && cur_text() == s; }
  bool cur_is_ident() const { return !at_end() && cur().kind == TokenKind::Identifier; }
  std::string_view peek_text(size_t k) const {
    return pos_ + k < toks_.size() ? text(toks_[pos_ + k]) : std::string_view{};
  }
  void advance() { ++pos_; }

  uint32_t indent_of(uint32_t offset) const {
    uint32_t start = lines_.line_start(offset);
    uint32_t i = start;
    while (i < src_.size() && (src_[i] == ' ' || src_[i] == '\t')) ++i;
    return i - start;
  }

  LineCol pos_of(const Token& t) const { return lines_.locate(t.span.begin); }

  uint32_t eof_offset() const {
    return toks_.empty() ? 0 : toks_.back().span.end;
  }

  // ---- unit mutation helpers ----------------------------------------------

  struct Mark {
    size_t pos, decls, calls, anns, gaps;
  };
  Mark mark() const {
    return {pos_, unit_.declarations.size(), unit_.calls.size(),
            unit_.raw_annotations.size(), unit_.parse_gaps.size()};
  }
  void restore(const Mark& m) {
    pos_ = m.pos;
    unit_.declarations.resize(m.decls);
    unit_.calls.resize(m.calls);
    unit_.raw_annotations.resize(m.anns);
    unit_.parse_gaps.resize(m.gaps);
  }

  void record_gap(uint32_t begin, uint32_t end) {
    if (end > begin) unit_.parse_gaps.push_back({begin, end});
  }

  /// Drops everything parsed after `m` and replaces it with one gap. Keeps
  /// the cursor where it is.
  void truncate_to_gap(const Mark& m, uint32_t gap_begin, uint32_t gap_end) {
    size_t keep = pos_;
    restore(m);
    pos_ = keep;
    record_gap(gap_begin, gap_end);
  }

  void normalize_gaps() {
    auto& gaps = unit_.parse_gaps;
    std::sort(gaps.begin(), gaps.end(),
              [](const Span& a, const Span& b) { return a.begin < b.begin; });
    std::vector<Span> merged;
    for (const Span& g : gaps) {
      if (!merged.empty() && g.begin <= merged.back().end) {
        merged.back().end = std::max(merged.back().end, g.end);
      } else {
        merged.push_back(g);
      }
    }
    gaps = std::move(merged);
  }

  // ---- annotations ---------------------------------------------------------

  std::optional<RawAnnotation> parse_annotation() {
    if (!cur_is("@")) return std::nullopt;
    uint32_t begin = cur().span.begin;
    advance();
    if (!cur_is_ident()) return std::nullopt;
    std::string name(cur_text());
    uint32_t end = cur().span.end;
    advance();
    while (cur_is(".") && pos_ + 1 < toks_.size() &&
           toks_[pos_ + 1].kind == TokenKind::Identifier) {
      advance();
      name = std::string(cur_text());
      end = cur().span.end;
      advance();
    }
    RawAnnotation ann;
    ann.name = name;
    if (cur_is("(")) {
      advance();
      parse_annotation_elements(ann);
      if (cur_is(")")) {
        end = cur().span.end;
        advance();
      } else if (pos_ > 0) {
        end = toks_[pos_ - 1].span.end;
      }
    }
    ann.span = {begin, end};
    return ann;
  }

  void parse_annotation_elements(RawAnnotation& ann) {
    while (!at_end() && !cur_is(")")) {
      std::string key = "value";
      if (cur_is_ident() && peek_text(1) == "=") {
        key = std::string(cur_text());
        advance();
        advance();
      }
      AnnotationValue value = parse_annotation_value();
      if (!ann.element(key)) ann.elements.emplace_back(key, std::move(value));
      if (cur_is(",")) {
        advance();
      } else if (!cur_is(")")) {
        break;  // malformed; stop here, caller recovers
      }
    }
  }

  AnnotationValue parse_annotation_value() {
    AnnotationValue v;
    if (at_end()) return v;
    if (cur_is("{")) {
      v.kind = AnnotationValue::Kind::Array;
      advance();
      while (!at_end() && !cur_is("}")) {
        v.items.push_back(parse_annotation_value());
        if (cur_is(",")) advance();
        else break;
      }
      if (cur_is("}")) advance();
      return v;
    }
    if (cur().kind == TokenKind::String) {
      v.kind = AnnotationValue::Kind::String;
      v.text = decode_string(text(cur()));
      advance();
      return v;
    }
    if (cur_is_ident()) {
      v.kind = AnnotationValue::Kind::EnumPath;
      std::string path(cur_text());
      advance();
      while (cur_is(".") && pos_ + 1 < toks_.size() &&
             toks_[pos_ + 1].kind == TokenKind::Identifier) {
        advance();
        path += ".";
        path += std::string(cur_text());
        advance();
      }
      v.text = std::move(path);
      return v;
    }
    v.kind = AnnotationValue::Kind::String;
    v.text = std::string(cur_text());
    advance();
    return v;
  }

  static std::string decode_string(std::string_view tok) {
    size_t begin = 0, end = tok.size();
    if (tok.size() >= 6 && tok.substr(0, 3) == "\"\"\"" && tok.substr(tok.size() - 3) == "\"\"\"") {
      begin = 3;
      end = tok.size() - 3;
    } else {
      if (!tok.empty() && tok.front() == '"') begin = 1;
      if (end > begin && tok.back() == '"') --end;
    }
    std::string out;
    for (size_t i = begin; i < end; ++i) {
      if (tok[i] == '\\' && i + 1 < end) {
        ++i;
        switch (tok[i]) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          default: out += tok[i];
        }
      } else {
        out += tok[i];
      }
    }
    return out;
  }

  void record_annotation_site(RawAnnotation ann, AnnotationHost host, int decl_index = -1) {
    unit_.raw_annotations.push_back({std::move(ann), host, decl_index});
  }

  void flush_orphans(std::vector<RawAnnotation>& pending, AnnotationHost host = AnnotationHost::Other) {
    for (RawAnnotation& ann : pending) record_annotation_site(std::move(ann), host);
    pending.clear();
  }

  // ---- types ---------------------------------------------------------------

  struct TypeRef {
    std::string text;
    uint32_t begin = 0, end = 0;
  };

  std::optional<TypeRef> parse_type_ref() {
    if (!cur_is_ident()) return std::nullopt;
    std::string_view first = cur_text();
    if (first != "void" && !is_type_start_word(first)) return std::nullopt;
    Mark m = mark();
    uint32_t begin = cur().span.begin;
    uint32_t end = cur().span.end;
    advance();
    if (!kPrimitiveTypes.count(first) && first != "void") {
      while (cur_is(".") && pos_ + 1 < toks_.size() &&
             toks_[pos_ + 1].kind == TokenKind::Identifier) {
        advance();
        end = cur().span.end;
        advance();
      }
    }
    if (cur_is("<") && !skip_generic_args(end)) {
      restore(m);
      return std::nullopt;
    }
    while (cur_is("[") && peek_text(1) == "]") {
      advance();
      end = cur().span.end;
      advance();
    }
    return TypeRef{std::string(src_.substr(begin, end - begin)), begin, end};
  }

  bool skip_generic_args(uint32_t& end) {
    int depth = 0;
    size_t guard = 0;
    while (!at_end() && guard++ < 256) {
      std::string_view t = cur_text();
      if (t == "<") depth += 1;
      else if (t == ">") depth -= 1;
      else if (t == ">>") depth -= 2;
      else if (t == ">>>") depth -= 3;
      else if (t == ";" || t == "{" || t == "}" || t == ")" || t == "(" ||
               cur().kind == TokenKind::String)
        return false;
      end = cur().span.end;
      advance();
      if (depth <= 0) return depth == 0;
    }
    return false;
  }

  // ---- call extraction -----------------------------------------------------

  size_t find_matching_paren(size_t open_pos) const {
    int depth = 0;
    for (size_t i = open_pos; i < toks_.size(); ++i) {
      std::string_view t = src_.substr(toks_[i].span.begin, toks_[i].span.length());
      if (t == "(") ++depth;
      else if (t == ")") {
        if (--depth == 0) return i;
      }
    }
    return toks_.size();
  }

  /// Records a call whose method-name token sits at `name_pos`;
  /// toks_[name_pos + 1] must be '('.
  void record_call(size_t name_pos, bool executable) {
    const Token& name_tok = toks_[name_pos];
    std::string_view name = text(name_tok);
    if (kStatementKeywords.count(name)) return;  // if(...), this(...), etc.
    size_t chain_begin = name_pos;
    std::string receiver;
    if (name_pos >= 1 && text(toks_[name_pos - 1]) == "new") {
      chain_begin = name_pos - 1;
      receiver = "new";
    } else if (name_pos >= 2 && text(toks_[name_pos - 1]) == ".") {
      // Walk back over a simple dotted chain: Ident ('.' Ident)* '.'
      size_t i = name_pos - 1;
      size_t start = name_pos;
      bool expect_name = true;
      while (true) {
        std::string_view t = text(toks_[i]);
        if (expect_name && t == ".") {
          expect_name = false;
        } else if (!expect_name &&
                   ((toks_[i].kind == TokenKind::Identifier && !kStatementKeywords.count(t)) ||
                    t == "this" || t == "super")) {
          start = i;
          expect_name = true;
        } else {
          break;
        }
        if (i == 0) break;
        --i;
      }
      if (start < name_pos) {
        chain_begin = start;
        uint32_t rbegin = toks_[start].span.begin;
        uint32_t rend = toks_[name_pos - 1].span.begin;
        receiver = std::string(src_.substr(rbegin, rend - rbegin));
        while (!receiver.empty() &&
               (receiver.back() == '.' ||
                std::isspace(static_cast<unsigned char>(receiver.back()))))
          receiver.pop_back();
      }
      // else: receiver is a chained expression (a.b().c()); leave it empty.
    }
    size_t close = find_matching_paren(name_pos + 1);
    uint32_t span_end = close < toks_.size() ? toks_[close].span.end : eof_offset();
    CallSite call;
    call.method_name = std::string(name);
    call.receiver_text = receiver;
    call.span = {toks_[chain_begin].span.begin, span_end};
    call.pos = pos_of(name_tok);
    call.in_executable_body = executable;
    if (close < toks_.size()) {
      int pd = 0, bd = 0, cd = 0;
      size_t start = name_pos + 2;
      for (size_t i = name_pos + 2; i <= close; ++i) {
        std::string_view ti = text(toks_[i]);
        bool boundary = (i == close) || (ti == "," && pd == 0 && bd == 0 && cd == 0);
        if (boundary) {
          if (i > start) {
            uint32_t b = toks_[start].span.begin;
            uint32_t e = toks_[i - 1].span.end;
            call.arguments.push_back({std::string(src_.substr(b, e - b)), Span{b, e}});
          }
          start = i + 1;
          if (i == close) break;
          continue;
        }
        if (ti == "(") ++pd;
        else if (ti == ")") --pd;
        else if (ti == "[") ++bd;
        else if (ti == "]") --bd;
        else if (ti == "{") ++cd;
        else if (ti == "}") --cd;
      }
    }
    unit_.calls.push_back(std::move(call));
  }

  /// Scans an expression region, extracting calls. Stops without consuming at
  /// a depth-0 terminator, at a '}' that would close the enclosing block, or
  /// at EOF. Returns whether it consumed at least one token.
  bool scan_expression(const std::set<std::string_view>& terminators, bool executable) {
    int pdepth = 0, bdepth = 0, cdepth = 0;
    bool consumed = false;
    while (!at_end()) {
      std::string_view t = cur_text();
      if (pdepth == 0 && bdepth == 0 && cdepth == 0 && terminators.count(t)) break;
      if (t == "}" && cdepth == 0) break;
      if (t == "(") ++pdepth;
      else if (t == ")") {
        if (pdepth == 0) break;
        --pdepth;
      } else if (t == "[") ++bdepth;
      else if (t == "]") {
        if (bdepth == 0) break;
        --bdepth;
      } else if (t == "{") ++cdepth;
      else if (t == "}") --cdepth;
      else if (cur().kind == TokenKind::Identifier && peek_text(1) == "(") {
        record_call(pos_, executable);
      }
      advance();
      consumed = true;
    }
    return consumed;
  }

  /// Scans a balanced parenthesized region starting at '(' (consumes it).
  void scan_parens(bool executable) {
    if (!cur_is("(")) return;
    int pdepth = 0, cdepth = 0;
    while (!at_end()) {
      std::string_view t = cur_text();
      if (t == "(") ++pdepth;
      else if (t == ")") {
        --pdepth;
        if (pdepth == 0) {
          advance();
          return;
        }
      } else if (t == "{") ++cdepth;
      else if (t == "}") {
        if (cdepth == 0) return;  // malformed; leave the '}' to the caller
        --cdepth;
      } else if (cur().kind == TokenKind::Identifier && peek_text(1) == "(") {
        record_call(pos_, executable);
      }
      advance();
    }
  }

  void patch_statement_span(size_t first_call, uint32_t begin, uint32_t end) {
    if (end <= begin) return;
    for (size_t i = first_call; i < unit_.calls.size(); ++i) {
      if (unit_.calls[i].enclosing_statement_span.empty())
        unit_.calls[i].enclosing_statement_span = {begin, end};
    }
  }

  // ---- declarations --------------------------------------------------------

  /// Cursor sits on the first declarator name; `stmt_begin` points at the
  /// first modifier or the type token. Returns false if no declarator parsed.
  bool parse_declarators(const TypeRef& type, uint32_t stmt_begin, DeclKind kind,
                         bool executable, std::vector<RawAnnotation> pending) {
    std::vector<size_t> decl_indices;
    size_t first_call = unit_.calls.size();
    uint32_t stmt_end = stmt_begin;
    while (true) {
      if (!cur_is_ident() || kStatementKeywords.count(cur_text())) break;
      const Token name_tok = cur();
      advance();
      while (cur_is("[") && peek_text(1) == "]") {
        advance();
        advance();
      }
      VarDeclaration decl;
      decl.name = std::string(text(name_tok));
      decl.declared_type_text = type.text;
      decl.name_span = name_tok.span;
      decl.pos = pos_of(name_tok);
      decl.kind = kind;
      uint32_t decl_end = name_tok.span.end;
      if (cur_is("=")) {
        advance();
        uint32_t init_begin = at_end() ? name_tok.span.end : cur().span.begin;
        scan_expression({";", ","}, executable);
        uint32_t init_end = pos_ > 0 ? toks_[pos_ - 1].span.end : init_begin;
        if (init_end > init_begin) decl.initializer_span = Span{init_begin, init_end};
        decl_end = std::max(decl_end, init_end);
      }
      decl.span = {name_tok.span.begin, decl_end};
      decl_indices.push_back(unit_.declarations.size());
      unit_.declarations.push_back(std::move(decl));
      if (cur_is(",")) {
        advance();
        continue;
      }
      if (cur_is(";")) {
        stmt_end = cur().span.end;
        advance();
      } else {
        stmt_end = pos_ > 0 ? toks_[pos_ - 1].span.end : stmt_begin;
      }
      break;
    }
    if (decl_indices.empty()) return false;
    const auto group = static_cast<uint32_t>(decl_indices.size());
    for (size_t idx : decl_indices) {
      unit_.declarations[idx].declarator_group_size = group;
      unit_.declarations[idx].stmt_span = {stmt_begin, stmt_end};
      unit_.declarations[idx].annotations = pending;
    }
    for (RawAnnotation& ann : pending) {
      record_annotation_site(std::move(ann), AnnotationHost::Declaration,
                             static_cast<int>(decl_indices.front()));
    }
    patch_statement_span(first_call, stmt_begin, stmt_end);
    return true;
  }

  // ---- top level -----------------------------------------------------------

  void parse_top_level() {
    std::vector<RawAnnotation> pending;
    size_t last_pos = static_cast<size_t>(-1);
    while (!at_end()) {
      if (pos_ == last_pos) {
        advance();
        continue;
      }
      last_pos = pos_;
      std::string_view t = cur_text();
      if (t == "@" && peek_text(1) == "interface") {
        advance();
        parse_type_decl(std::move(pending));
        pending.clear();
        continue;
      }
      if (t == "@") {
        if (auto ann = parse_annotation()) pending.push_back(std::move(*ann));
        else advance();
        continue;
      }
      if (t == "package") {
        advance();
        std::string name;
        while (cur_is_ident() || cur_is(".")) {
          name += std::string(cur_text());
          advance();
        }
        if (cur_is(";")) advance();
        if (!name.empty()) unit_.package_name = name;
        flush_orphans(pending);
        continue;
      }
      if (t == "import") {
        parse_import();
        continue;
      }
      if (kModifiers.count(t)) {
        advance();
        continue;
      }
      if (t == "class" || t == "interface" || t == "enum" || t == "record") {
        parse_type_decl(std::move(pending));
        pending.clear();
        continue;
      }
      if (t == ";") {
        advance();
        continue;
      }
      recovery_skip_top();
      flush_orphans(pending);
    }
    flush_orphans(pending);
  }

  void parse_import() {
    advance();
    Import imp;
    if (cur_is("static")) {
      imp.is_static = true;
      advance();
    }
    std::string name;
    while (!at_end()) {
      if (cur_is_ident()) {
        name += std::string(cur_text());
        advance();
      } else if (cur_is(".")) {
        if (peek_text(1) == "*") {
          imp.wildcard = true;
          advance();
          advance();
          break;
        }
        name += ".";
        advance();
      } else {
        break;
      }
    }
    if (cur_is(";")) advance();
    if (!name.empty()) {
      imp.qualified_name = name;
      unit_.imports.push_back(std::move(imp));
    }
  }

  void recovery_skip_top() {
    uint32_t begin = cur().span.begin;
    advance();
    int depth = 0;
    while (!at_end()) {
      std::string_view t = cur_text();
      if (t == "{") ++depth;
      else if (t == "}") {
        if (depth > 0) --depth;
      } else if (depth == 0 &&
                 (t == "class" || t == "interface" || t == "enum" || t == "record" ||
                  t == "import" || t == "package" || t == "@" || kModifiers.count(t))) {
        break;
      }
      advance();
    }
    record_gap(begin, at_end() ? eof_offset() : cur().span.begin);
  }

  /// Cursor sits on the class/interface/enum/record keyword.
  void parse_type_decl(std::vector<RawAnnotation> pending) {
    const bool is_enum = cur_is("enum");
    uint32_t header_indent = indent_of(cur().span.begin);
    advance();
    flush_orphans(pending, AnnotationHost::TypeDecl);
    if (cur_is_ident()) advance();  // type name
    int pdepth = 0;
    while (!at_end() && !(pdepth == 0 && cur_is("{"))) {
      std::string_view t = cur_text();
      if (t == "(") ++pdepth;
      else if (t == ")") --pdepth;
      else if (t == ";" && pdepth == 0) {
        advance();
        return;
      } else if (t == "}" && pdepth == 0) {
        return;  // malformed header; let the caller handle the brace
      }
      advance();
    }
    if (!at_end()) parse_class_body(header_indent, is_enum);
  }

  /// Cursor sits on '{' of a type body.
  void parse_class_body(uint32_t header_indent, bool is_enum) {
    advance();
    if (is_enum) skip_enum_constants();
    std::vector<RawAnnotation> pending;
    std::optional<uint32_t> member_start;
    size_t last_pos = static_cast<size_t>(-1);
    while (!at_end()) {
      if (pos_ == last_pos) {
        advance();
        continue;
      }
      last_pos = pos_;
      std::string_view t = cur_text();
      if (t == "}") {
        advance();
        flush_orphans(pending);
        return;
      }
      if (t == ";") {
        advance();
        member_start.reset();
        continue;
      }
      if (t == "@" && peek_text(1) == "interface") {
        advance();
        parse_type_decl(std::move(pending));
        pending.clear();
        member_start.reset();
        continue;
      }
      if (t == "@") {
        if (auto ann = parse_annotation()) pending.push_back(std::move(*ann));
        else advance();
        continue;
      }
      if (kModifiers.count(t)) {
        if (!member_start) member_start = cur().span.begin;
        advance();
        continue;
      }
      if (t == "class" || t == "interface" || t == "enum" || t == "record") {
        parse_type_decl(std::move(pending));
        pending.clear();
        member_start.reset();
        continue;
      }
      if (t == "{") {  // static/instance initializer block
        parse_block(indent_of(cur().span.begin), /*executable=*/true);
        member_start.reset();
        continue;
      }
      Mark m = mark();
      uint32_t stmt_begin = member_start.value_or(cur().span.begin);
      std::optional<TypeRef> type = parse_type_ref();
      if (type && cur_is("(")) {
        // Constructor: the "type" was the class name.
        parse_method_tail(std::move(pending));
        pending.clear();
        member_start.reset();
        continue;
      }
      if (type && cur_is_ident() && !kStatementKeywords.count(cur_text())) {
        std::string_view after = peek_text(1);
        if (after == "(") {
          advance();  // method name
          parse_method_tail(std::move(pending));
          pending.clear();
          member_start.reset();
          continue;
        }
        if (after == "=" || after == "," || after == ";" || after == "[") {
          if (parse_declarators(*type, stmt_begin, DeclKind::Field,
                                /*executable=*/false, std::move(pending))) {
            pending.clear();
            member_start.reset();
            continue;
          }
        }
      }
      restore(m);
      recovery_skip_member();
      flush_orphans(pending);
      member_start.reset();
    }
    flush_orphans(pending);
    (void)header_indent;
  }

  void skip_enum_constants() {
    while (!at_end()) {
      std::string_view t = cur_text();
      if (t == ";") {
        advance();
        return;
      }
      if (t == "}") return;
      if (t == "@") {
        if (auto ann = parse_annotation())
          record_annotation_site(std::move(*ann), AnnotationHost::Other);
        else advance();
        continue;
      }
      if (cur_is_ident()) {
        advance();
        if (cur_is("(")) scan_parens(/*executable=*/false);
        if (cur_is("{")) parse_class_body(indent_of(cur().span.begin), false);
        if (cur_is(",")) advance();
        continue;
      }
      advance();
    }
  }

  /// Cursor sits on '(' of a method/constructor parameter list.
  void parse_method_tail(std::vector<RawAnnotation> pending) {
    uint32_t header_indent = at_end() ? 0 : indent_of(cur().span.begin);
    flush_orphans(pending, AnnotationHost::Method);
    parse_parameter_list();
    while (!at_end() && !cur_is("{") && !cur_is(";")) {
      if (cur_is("default")) {  // annotation-member default value
        advance();
        scan_expression({";"}, /*executable=*/false);
        continue;
      }
      if (cur_is("}")) return;  // tolerate: missing body
      advance();
    }
    if (cur_is(";")) {
      advance();
      return;
    }
    if (cur_is("{")) parse_block(header_indent, /*executable=*/true);
  }

  void parse_parameter_list() {
    if (!cur_is("(")) return;
    advance();
    std::vector<RawAnnotation> pending;
    size_t last_pos = static_cast<size_t>(-1);
    while (!at_end() && !cur_is(")")) {
      if (pos_ == last_pos) {
        advance();
        continue;
      }
      last_pos = pos_;
      std::string_view t = cur_text();
      if (t == "@") {
        if (auto ann = parse_annotation()) pending.push_back(std::move(*ann));
        else advance();
        continue;
      }
      if (t == "final" || t == ",") {
        advance();
        continue;
      }
      uint32_t stmt_begin = cur().span.begin;
      std::optional<TypeRef> type = parse_type_ref();
      if (!type) {
        advance();
        continue;
      }
      if (cur_is("...")) advance();
      if (!cur_is_ident() || kStatementKeywords.count(cur_text())) continue;
      const Token name_tok = cur();
      advance();
      while (cur_is("[") && peek_text(1) == "]") {
        advance();
        advance();
      }
      VarDeclaration decl;
      decl.name = std::string(text(name_tok));
      decl.declared_type_text = type->text;
      decl.name_span = name_tok.span;
      decl.span = {stmt_begin, name_tok.span.end};
      decl.stmt_span = decl.span;
      decl.pos = pos_of(name_tok);
      decl.kind = DeclKind::Parameter;
      decl.annotations = pending;
      size_t idx = unit_.declarations.size();
      unit_.declarations.push_back(std::move(decl));
      for (RawAnnotation& ann : pending)
        record_annotation_site(std::move(ann), AnnotationHost::Declaration,
                               static_cast<int>(idx));
      pending.clear();
    }
    if (cur_is(")")) advance();
    flush_orphans(pending);
  }

  bool starts_line(const Token& t) const {
    uint32_t start = lines_.line_start(t.span.begin);
    uint32_t i = start;
    while (i < src_.size() && (src_[i] == ' ' || src_[i] == '\t')) ++i;
    return i == t.span.begin;
  }

  /// A token that plausibly begins the next member after garbage: modifiers,
  /// annotations, or a "Type name" pair at the start of a line.
  bool member_resync_point() const {
    if (at_end()) return false;
    if (!starts_line(cur())) return false;
    std::string_view t = cur_text();
    if (t == "@" || kModifiers.count(t)) return true;
    if (cur_is_ident() && is_type_start_word(t)) {
      if (kPrimitiveTypes.count(t)) return true;
      if (pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == TokenKind::Identifier &&
          !kStatementKeywords.count(peek_text(1)))
        return true;
    }
    return false;
  }

  void recovery_skip_member() {
    uint32_t begin = cur().span.begin;
    advance();
    int depth = 0;
    bool stopped_at_resync = false;
    while (!at_end()) {
      std::string_view t = cur_text();
      if (t == "{") ++depth;
      else if (t == "}") {
        if (depth == 0) break;  // class-body close; leave it to the caller
        --depth;
      } else if (t == ";" && depth == 0) {
        advance();
        break;
      } else if (depth == 0 && member_resync_point()) {
        stopped_at_resync = true;
        break;
      }
      advance();
    }
    uint32_t end;
    if (at_end()) end = eof_offset();
    else if (cur_is("}") || stopped_at_resync) end = cur().span.begin;
    else end = toks_[pos_ - 1].span.end;
    record_gap(begin, end);
  }

  // ---- executable blocks ---------------------------------------------------

  /// Cursor sits on '{'. `header_indent` is the indentation of the construct
  /// owning the block; recovery heuristics compare against it.
  void parse_block(uint32_t header_indent, bool executable) {
    const Token open = cur();
    Mark body_mark = mark();
    advance();
    std::vector<RawAnnotation> pending;
    std::optional<uint32_t> stmt_modifier_start;
    size_t last_pos = static_cast<size_t>(-1);
    while (true) {
      if (at_end()) {
        // Unterminated block: everything it swallowed becomes one gap.
        truncate_to_gap(body_mark, open.span.end, eof_offset());
        return;
      }
      if (pos_ == last_pos) {
        advance();
        continue;
      }
      last_pos = pos_;
      std::string_view t = cur_text();
      if (t == "}") {
        advance();
        flush_orphans(pending);
        return;
      }
      if (t == ";") {
        advance();
        stmt_modifier_start.reset();
        continue;
      }
      if (t == "{") {
        parse_block(indent_of(cur().span.begin), executable);
        continue;
      }
      if (t == "@") {
        if (auto ann = parse_annotation()) pending.push_back(std::move(*ann));
        else advance();
        continue;
      }
      if (t == "public" || t == "private" || t == "protected" || t == "static") {
        // Members cannot start inside a block: the enclosing body is missing
        // its close brace. Truncate to a gap and let the caller re-parse.
        truncate_to_gap(body_mark, open.span.end, cur().span.begin);
        return;
      }
      if (t == "final") {
        if (!stmt_modifier_start) stmt_modifier_start = cur().span.begin;
        advance();
        continue;
      }
      if (t == "class" || t == "interface" || t == "enum") {  // local class
        parse_type_decl(std::move(pending));
        pending.clear();
        stmt_modifier_start.reset();
        continue;
      }
      if (t == "if" || t == "while" || t == "switch" || t == "for" ||
          t == "catch" || t == "synchronized" || t == "try") {
        uint32_t stmt_begin = cur().span.begin;
        advance();
        if (cur_is("(")) {
          size_t first_call = unit_.calls.size();
          scan_parens(executable);
          patch_statement_span(first_call, stmt_begin,
                               pos_ > 0 ? toks_[pos_ - 1].span.end : stmt_begin);
        }
        continue;
      }
      if (t == "do" || t == "else" || t == "finally" ||
          t == "case" || t == "default") {
        advance();
        if (t == "case") scan_expression({":", ";"}, executable);
        if (cur_is(":")) advance();
        continue;
      }
      if (t == "return" || t == "throw" || t == "assert" || t == "yield" ||
          t == "break" || t == "continue") {
        uint32_t stmt_begin = cur().span.begin;
        advance();
        size_t first_call = unit_.calls.size();
        scan_expression({";"}, executable);
        uint32_t stmt_end = consume_semicolon(stmt_begin);
        patch_statement_span(first_call, stmt_begin, stmt_end);
        continue;
      }
      if (cur_is_ident() && is_type_start_word(t)) {
        Mark m = mark();
        uint32_t stmt_begin = stmt_modifier_start.value_or(cur().span.begin);
        std::optional<TypeRef> type = parse_type_ref();
        if (type && cur_is_ident() && !kStatementKeywords.count(cur_text())) {
          std::string_view after = peek_text(1);
          if (after == "=" || after == "," || after == ";" || after == "[") {
            if (parse_declarators(*type, stmt_begin, DeclKind::Local, executable,
                                  std::move(pending))) {
              pending.clear();
              stmt_modifier_start.reset();
              continue;
            }
            restore(m);
          } else if (after == "(") {
            // A method-declaration shape inside a block means the enclosing
            // body lost its close brace. Verify before truncating.
            size_t close = find_matching_paren(pos_ + 1);
            bool method_like = false;
            if (close + 1 < toks_.size()) {
              std::string_view nxt = text(toks_[close + 1]);
              method_like = nxt == "{" || nxt == ";" || nxt == "throws";
            }
            restore(m);
            if (method_like && indent_of(stmt_begin) <= header_indent) {
              truncate_to_gap(body_mark, open.span.end, stmt_begin);
              return;
            }
          } else {
            restore(m);
          }
        } else {
          restore(m);
        }
      }
      // Expression statement.
      uint32_t stmt_begin = stmt_modifier_start.value_or(cur().span.begin);
      size_t first_call = unit_.calls.size();
      bool consumed = scan_expression({";"}, executable);
      uint32_t stmt_end = consume_semicolon(stmt_begin);
      if (!consumed && stmt_end <= stmt_begin && !at_end() && !cur_is("}")) advance();
      patch_statement_span(first_call, stmt_begin, stmt_end);
      flush_orphans(pending);
      stmt_modifier_start.reset();
    }
  }

  uint32_t consume_semicolon(uint32_t fallback) {
    if (cur_is(";")) {
      uint32_t end = cur().span.end;
      advance();
      return end;
    }
    return pos_ > 0 ? toks_[pos_ - 1].span.end : fallback;
  }

  std::string_view src_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  CompilationUnit unit_;
  LineIndex lines_;
};

}  // namespace

CompilationUnit parse_unit(std::string_view source, const std::string& file_path) {
  Parser parser(source, file_path);
  return parser.run();
}

std::optional<RawAnnotation> parse_annotation_text(std::string_view text) {
  std::string wrapped = "class MatchaProbe { ";
  wrapped += text;
  wrapped += " int matchaProbeField; }";
  CompilationUnit unit = parse_unit(wrapped, "<annotation>");
  if (unit.raw_annotations.size() != 1) return std::nullopt;
  return unit.raw_annotations.front().annotation;
}

}  // namespace matcha::java
