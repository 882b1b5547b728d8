#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace emkit::corpus {

// A token plus its byte range in the source text.
struct TokenSpan {
  std::string text;  // lowercased
  size_t start = 0;
  size_t end = 0;
};

// Deterministic word/punctuation tokenizer defining every token budget in
// this codebase. Lowercases, splits on whitespace, and emits each
// non-alphanumeric byte as its own token. A subword tokenizer can be
// slotted in behind the same contract if budgets must match a model
// vocabulary.
std::vector<std::string> tokenize(std::string_view text);

// tokenize plus byte offsets against the input.
std::vector<TokenSpan> tokenize_spans(std::string_view text);

// Joins tokens with single spaces; tokenize(detokenize(tokenize(s))) ==
// tokenize(s).
std::string detokenize(const std::vector<std::string>& tokens);

size_t count_tokens(std::string_view text);

}  // namespace emkit::corpus
