#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "emkit/corpus/types.hpp"

namespace emkit::corpus {

// One corpus entry: a text document, or a structured record travelling
// under the same id/metadata envelope.
struct CorpusEntry {
  Document doc;
  std::optional<StructuredRecord> record;  // set when source is structured
};

std::vector<CorpusEntry> read_corpus_jsonl(const std::string& path);
void write_corpus_jsonl(const std::string& path,
                        const std::vector<CorpusEntry>& entries);

std::vector<Chunk> read_chunks_jsonl(const std::string& path);
void write_chunks_jsonl(const std::string& path,
                        const std::vector<Chunk>& chunks);

struct MaskReportLine {
  std::string doc_id;
  MaskSpan span;
};
void write_mask_report(const std::string& path,
                       const std::vector<MaskReportLine>& lines);

void write_histogram_tsv(const std::string& path,
                         const std::vector<std::pair<size_t, size_t>>& bins);

// Plain list of dictionary surfaces, one per line; blank lines and
// #-comments skipped.
std::vector<std::string> read_surface_list(const std::string& path);

}  // namespace emkit::corpus
