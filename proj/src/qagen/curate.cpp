#include "emkit/qagen/curate.hpp"

#include <set>
#include <sstream>
#include <unordered_set>

#include "emkit/corpus/tokenizer.hpp"
#include "emkit/text_util.hpp"

namespace emkit::qagen {

bool is_stopword(const std::string& t) {
  static const std::unordered_set<std::string> kStop = {
      "a",     "an",    "and",   "are",   "as",    "at",    "be",    "been",
      "but",   "by",    "can",   "could", "did",   "do",    "does",  "for",
      "from",  "had",   "has",   "have",  "he",    "her",   "his",   "how",
      "i",     "if",    "in",    "into",  "is",    "it",    "its",   "may",
      "might", "more",  "most",  "no",    "not",   "of",    "on",    "or",
      "our",   "she",   "should","so",    "some",  "such",  "than",  "that",
      "the",   "their", "them",  "then",  "there", "these", "they",  "this",
      "those", "to",    "upon",  "us",    "was",   "we",    "were",  "what",
      "when",  "where", "which", "while", "who",   "whom",  "why",   "will",
      "with",  "would", "you",   "your",  "about", "after", "all",   "also",
      "any",   "because", "before", "being", "between", "both", "each",
      "few",   "further", "here", "itself", "just", "only", "other", "over",
      "own",   "same",  "too",   "under", "until", "very",
  };
  return kStop.count(t) > 0;
}

namespace {

size_t word_count(const std::string& s) {
  std::istringstream in(s);
  std::string w;
  size_t n = 0;
  while (in >> w) ++n;
  return n;
}

}  // namespace

std::vector<CandidateQuestion> curate(
    const std::vector<CandidateQuestion>& candidates,
    const corpus::Chunk& chunk, const CurationRules& rules) {
  std::unordered_set<std::string> chunk_content;
  if (rules.require_content_overlap) {
    for (const auto& tok : corpus::tokenize(chunk.text)) {
      if (tok.size() > 1 && !is_stopword(tok)) chunk_content.insert(tok);
    }
  }

  std::vector<CandidateQuestion> kept;
  std::set<std::string> seen;
  for (const auto& cand : candidates) {
    if (rules.require_question_mark) {
      if (cand.question.empty() || cand.question.back() != '?') continue;
    }
    if (rules.enforce_word_count) {
      size_t words = word_count(cand.question);
      if (words < rules.min_words || words > rules.max_words) continue;
    }
    if (rules.require_content_overlap) {
      bool overlap = false;
      for (const auto& tok : corpus::tokenize(cand.question)) {
        if (chunk_content.count(tok)) {
          overlap = true;
          break;
        }
      }
      if (!overlap) continue;
    }
    if (rules.drop_duplicates) {
      std::string folded = text::to_lower_ascii(cand.question);
      if (!seen.insert(folded).second) continue;
    }
    kept.push_back(cand);
  }
  return kept;
}

}  // namespace emkit::qagen
