#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "emkit/qagen/generate.hpp"

namespace emkit::qagen {

// Binary-relevance pair: the question is relevant to exactly its chunk.
struct QAPair {
  std::string query_id;
  std::string question;
  std::string chunk_id;
  int relevance = 1;
  QuestionType q_type = QuestionType::unknown;
};

struct SplitConfig {
  double train_fraction = 0.95;
  uint64_t seed = 0;
  std::string stratify_key = "source";
};

struct SplitResult {
  std::vector<QAPair> train;
  std::vector<QAPair> validation;
};

// Per-stratum seeded shuffle; round-half-up train counts; output keeps
// input order inside each half. Deterministic for a fixed seed.
SplitResult split_dataset(
    const std::vector<QAPair>& pairs,
    const std::map<std::string, std::map<std::string, std::string>>& chunk_meta,
    const SplitConfig& cfg);

using Qrels = std::map<std::string, std::map<std::string, int>>;

struct Benchmark {
  std::vector<QAPair> queries;
  Qrels qrels;
};

// Loads queries (JSONL) + qrels (TSV) and validates referential
// integrity against the known chunk ids. Duplicate (query, chunk) lines
// and dangling chunk ids are errors.
Benchmark load_benchmark(const std::string& queries_path,
                         const std::string& qrels_path,
                         const std::set<std::string>& known_chunk_ids);

std::vector<QAPair> read_queries_jsonl(const std::string& path);
void write_queries_jsonl(const std::string& path,
                         const std::vector<QAPair>& pairs);

Qrels read_qrels_tsv(const std::string& path);
void write_qrels_tsv(const std::string& path, const std::vector<QAPair>& pairs);

}  // namespace emkit::qagen
