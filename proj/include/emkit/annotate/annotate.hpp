#pragma once

#include <string>
#include <vector>

#include "emkit/corpus/types.hpp"

namespace emkit::annotate {

struct EntityDictEntry {
  std::string surface;
  std::string entity_type;
};

struct EntityMention {
  std::string chunk_id;
  size_t start = 0;  // byte offsets into the chunk text
  size_t end = 0;
  std::string surface;
  std::string entity_type;
  std::string annotator = "auto";
};

struct AnnotationBatch {
  std::string batch_id;
  std::vector<std::string> chunk_ids;
  std::vector<std::string> annotators;  // exactly 3, distinct
};

// Dictionary pre-annotation. Finds every dictionary surface at word
// boundaries; overlapping candidates resolve by longest surface first,
// then earliest start (entity_type breaks the rare same-span tie).
// Mentions come back sorted by start with annotator = "auto".
std::vector<EntityMention> pre_annotate(const corpus::Chunk& chunk,
                                        const std::vector<EntityDictEntry>& dict,
                                        bool case_insensitive = false);

// Partitions chunk ids in input order into batches of batch_size and
// assigns 3 distinct annotators round-robin from the pool.
std::vector<AnnotationBatch> make_batches(
    const std::vector<std::string>& chunk_ids, size_t batch_size,
    const std::vector<std::string>& annotator_pool);

// Unanimity merge: a mention survives iff an identical (chunk_id, start,
// end, entity_type) tuple appears in all three inputs. Survivors carry
// annotator = "merged", sorted by (chunk_id, start).
std::vector<EntityMention> merge_unanimous(const std::vector<EntityMention>& a,
                                           const std::vector<EntityMention>& b,
                                           const std::vector<EntityMention>& c);

// CSV with header "surface,entity_type". Quoted fields supported.
std::vector<EntityDictEntry> read_entity_dict_csv(const std::string& path);

std::vector<EntityMention> read_mentions_jsonl(const std::string& path);
void write_mentions_jsonl(const std::string& path,
                          const std::vector<EntityMention>& mentions);

std::vector<AnnotationBatch> read_batches_jsonl(const std::string& path);
void write_batches_jsonl(const std::string& path,
                         const std::vector<AnnotationBatch>& batches);

}  // namespace emkit::annotate
