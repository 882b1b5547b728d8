#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace emkit::corpus {

enum class SourceType { plain_text, html, markdown, structured_records };

std::string to_string(SourceType s);
SourceType source_from_string(const std::string& s);

struct Document {
  std::string id;
  SourceType source = SourceType::plain_text;
  std::string text;
  std::map<std::string, std::string> metadata;
};

// Flattened tabular/hierarchical data as ordered key-value pairs.
// key_fields marks the context-carrying keys that must reach every chunk.
struct StructuredRecord {
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> key_fields;
};

// The atom of indexing, annotation and QA pairing.
struct Chunk {
  std::string id;
  std::string doc_id;
  size_t seq = 0;
  std::string text;
  size_t token_count = 0;
  // Leading tokens repeating the previous chunk's tail; 0 for seq 0.
  size_t overlap_prefix_tokens = 0;
};

// A detected sensitive span, byte offsets into the pre-mask text.
struct MaskSpan {
  size_t start = 0;
  size_t end = 0;
  std::string kind;
};

struct ChunkerConfig {
  size_t max_tokens = 512;
  size_t overlap_tokens = 50;
  // Coarse to fine; must end with "" (token-level fallback).
  std::vector<std::string> delimiters = {"\n\n", "\n", ". ", " ", ""};
};

}  // namespace emkit::corpus
