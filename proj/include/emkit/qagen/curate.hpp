#pragma once

#include <vector>

#include "emkit/corpus/types.hpp"
#include "emkit/qagen/generate.hpp"

namespace emkit::qagen {

// Mechanical stand-ins for manual review; each rule can be switched off.
struct CurationRules {
  bool require_question_mark = true;
  bool enforce_word_count = true;
  size_t min_words = 4;
  size_t max_words = 60;
  bool require_content_overlap = true;
  bool drop_duplicates = true;  // case-insensitive, per chunk
};

// Keeps a candidate iff every enabled rule passes. Order preserved;
// idempotent.
std::vector<CandidateQuestion> curate(
    const std::vector<CandidateQuestion>& candidates,
    const corpus::Chunk& chunk, const CurationRules& rules = {});

bool is_stopword(const std::string& lowercased_token);

}  // namespace emkit::qagen
