#include "emkit/corpus/clean.hpp"

#include "emkit/text_util.hpp"

namespace emkit::corpus {

namespace {

// Removes <...> runs. Unterminated '<' is kept as literal text.
std::string strip_tags(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<') {
      size_t close = s.find('>', i + 1);
      if (close != std::string_view::npos) {
        i = close + 1;
        continue;
      }
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::string fold_to_ascii(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t pos = 0;
  while (pos < s.size()) {
    size_t start = pos;
    uint32_t cp = text::decode_utf8(s, pos);
    if (cp < 0x80) {
      out.push_back(s[start]);
    } else {
      out += text::ascii_fold(cp);
    }
  }
  return out;
}

}  // namespace

std::string clean_text(std::string_view text) {
  std::string s = strip_tags(text::sanitize_utf8(text));
  s = fold_to_ascii(s);

  // Normalize line endings, drop other control characters.
  std::string flat;
  flat.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == '\r') {
      if (i + 1 < s.size() && s[i + 1] == '\n') continue;
      flat.push_back('\n');
    } else if (c == '\t' || c == '\v' || c == '\f') {
      flat.push_back(' ');
    } else if (c < 0x20 && c != '\n') {
      continue;
    } else if (c == 0x7F) {
      continue;
    } else {
      flat.push_back(static_cast<char>(c));
    }
  }

  // Collapse whitespace runs; a run holding >= 2 newlines becomes one
  // blank line, anything else a single space.
  std::string out;
  out.reserve(flat.size());
  size_t i = 0;
  while (i < flat.size()) {
    char c = flat[i];
    if (c == ' ' || c == '\n') {
      size_t newlines = 0;
      size_t j = i;
      while (j < flat.size() && (flat[j] == ' ' || flat[j] == '\n')) {
        if (flat[j] == '\n') ++newlines;
        ++j;
      }
      if (!out.empty() && j < flat.size()) {
        out += (newlines >= 2) ? "\n\n" : " ";
      }
      i = j;
    } else {
      out.push_back(c);
      ++i;
    }
  }
  return out;
}

}  // namespace emkit::corpus
