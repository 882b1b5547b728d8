#include "emkit/qagen/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "emkit/error.hpp"
#include "emkit/text_util.hpp"

namespace emkit::qagen {

using nlohmann::json;

SplitResult split_dataset(
    const std::vector<QAPair>& pairs,
    const std::map<std::string, std::map<std::string, std::string>>& chunk_meta,
    const SplitConfig& cfg) {
  if (cfg.train_fraction <= 0.0 || cfg.train_fraction >= 1.0) {
    throw InputError("split: train_fraction must be inside (0, 1)");
  }

  // stratum label -> indices into `pairs`, in input order
  std::map<std::string, std::vector<size_t>> strata;
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto meta_it = chunk_meta.find(pairs[i].chunk_id);
    if (meta_it == chunk_meta.end()) {
      throw InputError("split: no metadata for chunk '" + pairs[i].chunk_id +
                       "'");
    }
    auto key_it = meta_it->second.find(cfg.stratify_key);
    if (key_it == meta_it->second.end()) {
      throw InputError("split: chunk '" + pairs[i].chunk_id +
                       "' is missing stratify key '" + cfg.stratify_key + "'");
    }
    strata[key_it->second].push_back(i);
  }

  std::vector<bool> in_train(pairs.size(), false);
  for (auto& [label, indices] : strata) {
    // Per-stratum RNG stream: stable under stratum addition/removal.
    uint64_t stream = cfg.seed ^ text::fnv1a64(label);
    text::deterministic_shuffle(indices, stream);
    // round half up
    size_t train_n = static_cast<size_t>(std::floor(
        cfg.train_fraction * static_cast<double>(indices.size()) + 0.5));
    for (size_t j = 0; j < train_n && j < indices.size(); ++j) {
      in_train[indices[j]] = true;
    }
  }

  SplitResult result;
  for (size_t i = 0; i < pairs.size(); ++i) {
    (in_train[i] ? result.train : result.validation).push_back(pairs[i]);
  }
  return result;
}

std::vector<QAPair> read_queries_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open queries file: " + path);
  std::vector<QAPair> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": malformed JSON line");
    }
    QAPair pair;
    pair.query_id = j.at("query_id").get<std::string>();
    pair.question = j.at("question").get<std::string>();
    pair.chunk_id = j.value("chunk_id_hint", j.value("chunk_id", ""));
    pair.q_type = question_type_from_label(j.value("q_type", "unknown"));
    out.push_back(std::move(pair));
  }
  return out;
}

void write_queries_jsonl(const std::string& path,
                         const std::vector<QAPair>& pairs) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  for (const auto& pair : pairs) {
    json j;
    j["query_id"] = pair.query_id;
    j["question"] = pair.question;
    j["q_type"] = to_string(pair.q_type);
    j["chunk_id_hint"] = pair.chunk_id;
    out << j.dump() << '\n';
  }
}

Qrels read_qrels_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open qrels file: " + path);
  Qrels qrels;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string query_id, chunk_id, rel_text;
    if (!std::getline(fields, query_id, '\t') ||
        !std::getline(fields, chunk_id, '\t') ||
        !std::getline(fields, rel_text, '\t')) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": expected query_id<TAB>chunk_id<TAB>relevance");
    }
    int rel = 0;
    try {
      rel = std::stoi(rel_text);
    } catch (...) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": relevance is not an integer");
    }
    if (rel < 0) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": negative relevance");
    }
    auto [it, inserted] = qrels[query_id].emplace(chunk_id, rel);
    (void)it;
    if (!inserted) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": duplicate (query, chunk) judgment");
    }
  }
  return qrels;
}

void write_qrels_tsv(const std::string& path, const std::vector<QAPair>& pairs) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  for (const auto& pair : pairs) {
    out << pair.query_id << '\t' << pair.chunk_id << '\t' << pair.relevance
        << '\n';
  }
}

Benchmark load_benchmark(const std::string& queries_path,
                         const std::string& qrels_path,
                         const std::set<std::string>& known_chunk_ids) {
  Benchmark bench;
  bench.queries = read_queries_jsonl(queries_path);
  bench.qrels = read_qrels_tsv(qrels_path);

  std::vector<std::string> dangling;
  for (const auto& [query_id, judgments] : bench.qrels) {
    for (const auto& [chunk_id, rel] : judgments) {
      (void)rel;
      if (!known_chunk_ids.count(chunk_id)) {
        dangling.push_back(query_id + " -> " + chunk_id);
      }
    }
  }
  if (!dangling.empty()) {
    std::string msg = "qrels reference unknown chunks:";
    for (const auto& d : dangling) msg += " [" + d + "]";
    throw InputError(msg);
  }
  return bench;
}

}  // namespace emkit::qagen
