#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matcha {

/// Half-open byte range into a source buffer.
struct Span {
  uint32_t begin = 0;
  uint32_t end = 0;

  uint32_t length() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool contains(uint32_t offset) const { return offset >= begin && offset < end; }
  bool contains(const Span& other) const {
    return other.begin >= begin && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct LineCol {
  uint32_t line = 0;  // 1-based
  uint32_t col = 0;   // 1-based, in bytes
  friend bool operator==(const LineCol&, const LineCol&) = default;
};

/// Byte-offset -> line/column lookup table for one file.
class LineIndex {
 public:
  LineIndex() = default;
  explicit LineIndex(std::string_view text);

  LineCol locate(uint32_t offset) const;
  /// Byte offset of the first character of the line containing `offset`.
  uint32_t line_start(uint32_t offset) const;
  /// Leading whitespace (spaces/tabs) of the line containing `offset`.
  std::string_view indentation(std::string_view text, uint32_t offset) const;

 private:
  std::vector<uint32_t> line_starts_{0};
};

/// A single replacement in a file. Insertions use an empty range.
struct TextEdit {
  std::string file_path;
  Span replace_range;
  std::string new_text;
  friend bool operator==(const TextEdit&, const TextEdit&) = default;
};

/// Applies non-overlapping edits to `text`. Order of the input does not
/// matter; edits are applied in descending byte order internally.
std::string apply_edits(std::string_view text, std::vector<TextEdit> edits);

struct FileContent {
  std::string text;
  bool lossy = false;  // invalid UTF-8 bytes were replaced
};

/// Reads a file as UTF-8. Invalid bytes are replaced one-for-one with 0x1A
/// so byte offsets stay stable; `lossy` is set when that happened.
std::optional<FileContent> read_text_file(const std::string& path);

/// Writes via a temp file in the same directory followed by a rename.
bool write_file_atomic(const std::string& path, std::string_view content);

}  // namespace matcha
