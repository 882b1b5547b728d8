#include "emkit/corpus/tokenizer.hpp"

#include "emkit/text_util.hpp"

namespace emkit::corpus {

std::vector<TokenSpan> tokenize_spans(std::string_view text) {
  std::vector<TokenSpan> out;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (text::is_ascii_space(c)) {
      ++i;
      continue;
    }
    if (text::is_ascii_alnum(c)) {
      size_t start = i;
      while (i < n && text::is_ascii_alnum(text[i])) ++i;
      out.push_back({text::to_lower_ascii(text.substr(start, i - start)),
                     start, i});
    } else {
      // Every other byte is a single punctuation token. Multi-byte UTF-8
      // sequences come out one byte per token, which keeps the
      // detokenize/retokenize idempotence exact on arbitrary input.
      out.push_back({std::string(1, c), i, i + 1});
      ++i;
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& ts : tokenize_spans(text)) out.push_back(std::move(ts.text));
  return out;
}

std::string detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

size_t count_tokens(std::string_view text) {
  size_t i = 0, count = 0;
  const size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (text::is_ascii_space(c)) {
      ++i;
    } else if (text::is_ascii_alnum(c)) {
      while (i < n && text::is_ascii_alnum(text[i])) ++i;
      ++count;
    } else {
      ++i;
      ++count;
    }
  }
  return count;
}

}  // namespace emkit::corpus
