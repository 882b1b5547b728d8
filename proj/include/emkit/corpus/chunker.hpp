#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emkit/corpus/types.hpp"

namespace emkit::corpus {

// Splits cleaned text at blank lines; empty paragraphs are dropped.
std::vector<std::string> split_paragraphs(std::string_view text);

// Recursive token-budgeted chunking. Splitting tries the configured
// delimiters coarse to fine (the "" fallback splits between tokens),
// re-splitting any piece over budget, then greedily merges adjacent
// pieces. Each chunk after the first starts with the final
// cfg.overlap_tokens tokens of its predecessor (shortened when the
// predecessor is smaller). Guarantees per chunk:
//   token_count <= cfg.max_tokens
//   dropping each overlap prefix and concatenating the token lists
//   reproduces tokenize(text) exactly.
// Chunk ids are "<doc_id>#<seq>". Whitespace-only input yields no chunks.
std::vector<Chunk> chunk_text(std::string_view text, const ChunkerConfig& cfg,
                              const std::string& doc_id = "doc",
                              size_t first_seq = 0);

// Document-level chunking: clean, split into paragraphs, chunk each
// paragraph. Overlap never crosses a paragraph boundary; seq numbering is
// contiguous across the whole document.
std::vector<Chunk> chunk_document(const Document& doc,
                                  const ChunkerConfig& cfg);

// Renders a structured record as "key: value" lines and chunks it so that
// every emitted chunk carries every key_field line, re-budgeting content
// to make room. Rejects records whose key lines alone fill the budget.
std::vector<Chunk> denormalize_records(const StructuredRecord& record,
                                       const ChunkerConfig& cfg,
                                       const std::string& doc_id = "rec");

// (bin lower bound, count) pairs covering 0 .. max token_count; zero bins
// included; counts always sum to chunks.size().
std::vector<std::pair<size_t, size_t>> chunk_histogram(
    const std::vector<Chunk>& chunks, size_t bin_width);

// Throws InputError on violated structural invariants (overlap >=
// max_tokens, missing "" fallback).
void validate_chunker_config(const ChunkerConfig& cfg);

// Warns on stderr when overlap is outside the recommended 40-70 band.
void warn_if_overlap_unusual(const ChunkerConfig& cfg);

}  // namespace emkit::corpus
