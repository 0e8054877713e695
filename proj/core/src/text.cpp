#include "matcha/text.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace matcha {

LineIndex::LineIndex(std::string_view text) {
  line_starts_.clear();
  line_starts_.push_back(0);
  for (uint32_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') line_starts_.push_back(i + 1);
  }
}

LineCol LineIndex::locate(uint32_t offset) const {
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  uint32_t line = static_cast<uint32_t>(it - line_starts_.begin());
  uint32_t start = line_starts_[line - 1];
  return {line, offset - start + 1};
}

uint32_t LineIndex::line_start(uint32_t offset) const {
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  return line_starts_[static_cast<size_t>(it - line_starts_.begin()) - 1];
}

std::string_view LineIndex::indentation(std::string_view text, uint32_t offset) const {
  uint32_t start = line_start(offset);
  uint32_t i = start;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  return text.substr(start, i - start);
}

std::string apply_edits(std::string_view text, std::vector<TextEdit> edits) {
  std::sort(edits.begin(), edits.end(), [](const TextEdit& a, const TextEdit& b) {
    if (a.replace_range.begin != b.replace_range.begin)
      return a.replace_range.begin > b.replace_range.begin;
    return a.replace_range.end > b.replace_range.end;
  });
  std::string out(text);
  uint32_t last_begin = static_cast<uint32_t>(out.size()) + 1;
  for (const TextEdit& e : edits) {
    assert(e.replace_range.end <= text.size());
    assert(e.replace_range.end <= last_begin && "edits must not overlap");
    last_begin = e.replace_range.begin;
    out.replace(e.replace_range.begin, e.replace_range.length(), e.new_text);
  }
  return out;
}

namespace {

// Replaces bytes that do not form valid UTF-8 sequences with 0x1A. One byte
// in, one byte out, so spans computed on the sanitized text match the file.
bool sanitize_utf8(std::string& s) {
  bool lossy = false;
  size_t i = 0;
  auto replace_at = [&](size_t pos) {
    s[pos] = '\x1A';
    lossy = true;
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    size_t need = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      need = 1;
    } else if ((c & 0xF0) == 0xE0) {
      need = 2;
    } else if ((c & 0xF8) == 0xF0) {
      need = 3;
    } else {
      replace_at(i++);
      continue;
    }
    bool ok = i + need < s.size();
    if (ok) {
      for (size_t k = 1; k <= need; ++k) {
        if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      replace_at(i++);
    } else {
      i += need + 1;
    }
  }
  return lossy;
}

}  // namespace

std::optional<FileContent> read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) return std::nullopt;
  FileContent fc;
  fc.text = std::move(data);
  fc.lossy = sanitize_utf8(fc.text);
  return fc;
}

bool write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path target(path);
  fs::path dir = target.parent_path();
  if (dir.empty()) dir = ".";
  fs::path tmp = dir / (target.filename().string() + ".matcha-tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) return false;
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace matcha
