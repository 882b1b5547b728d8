#include "emkit/corpus/io.hpp"

#include <fstream>

#include <json.hpp>

#include "emkit/error.hpp"

namespace emkit::corpus {

using nlohmann::json;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open for reading: " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  return out;
}

json parse_line(const std::string& line, const std::string& path,
                size_t line_no) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) {
    throw InputError(path + ":" + std::to_string(line_no) +
                     ": malformed JSON line");
  }
  return j;
}

}  // namespace

std::vector<CorpusEntry> read_corpus_jsonl(const std::string& path) {
  auto in = open_in(path);
  std::vector<CorpusEntry> entries;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = parse_line(line, path, line_no);
    CorpusEntry entry;
    entry.doc.id = j.value("id", "");
    if (entry.doc.id.empty()) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": document missing id");
    }
    entry.doc.source = source_from_string(j.value("source", "plain_text"));
    if (j.contains("metadata")) {
      for (auto& [k, v] : j["metadata"].items()) {
        entry.doc.metadata[k] = v.get<std::string>();
      }
    }
    if (entry.doc.source == SourceType::structured_records) {
      StructuredRecord rec;
      if (!j.contains("fields")) {
        throw InputError(path + ":" + std::to_string(line_no) +
                         ": structured record missing fields");
      }
      for (auto& pair : j["fields"]) {
        rec.fields.emplace_back(pair.at(0).get<std::string>(),
                                pair.at(1).get<std::string>());
      }
      for (auto& k : j.value("key_fields", json::array())) {
        rec.key_fields.push_back(k.get<std::string>());
      }
      entry.record = std::move(rec);
    } else {
      entry.doc.text = j.value("text", "");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

void write_corpus_jsonl(const std::string& path,
                        const std::vector<CorpusEntry>& entries) {
  auto out = open_out(path);
  for (const auto& entry : entries) {
    json j;
    j["id"] = entry.doc.id;
    j["source"] = to_string(entry.doc.source);
    j["metadata"] = entry.doc.metadata;
    if (entry.record) {
      json fields = json::array();
      for (const auto& [k, v] : entry.record->fields) {
        fields.push_back(json::array({k, v}));
      }
      j["fields"] = fields;
      j["key_fields"] = entry.record->key_fields;
    } else {
      j["text"] = entry.doc.text;
    }
    out << j.dump() << '\n';
  }
}

std::vector<Chunk> read_chunks_jsonl(const std::string& path) {
  auto in = open_in(path);
  std::vector<Chunk> chunks;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = parse_line(line, path, line_no);
    Chunk c;
    c.id = j.at("id").get<std::string>();
    c.doc_id = j.at("doc_id").get<std::string>();
    c.seq = j.at("seq").get<size_t>();
    c.text = j.at("text").get<std::string>();
    c.token_count = j.at("token_count").get<size_t>();
    c.overlap_prefix_tokens = j.at("overlap_prefix_tokens").get<size_t>();
    chunks.push_back(std::move(c));
  }
  return chunks;
}

void write_chunks_jsonl(const std::string& path,
                        const std::vector<Chunk>& chunks) {
  auto out = open_out(path);
  for (const auto& c : chunks) {
    json j;
    j["id"] = c.id;
    j["doc_id"] = c.doc_id;
    j["seq"] = c.seq;
    j["text"] = c.text;
    j["token_count"] = c.token_count;
    j["overlap_prefix_tokens"] = c.overlap_prefix_tokens;
    out << j.dump() << '\n';
  }
}

void write_mask_report(const std::string& path,
                       const std::vector<MaskReportLine>& lines) {
  auto out = open_out(path);
  for (const auto& l : lines) {
    json j;
    j["doc_id"] = l.doc_id;
    j["start"] = l.span.start;
    j["end"] = l.span.end;
    j["kind"] = l.span.kind;
    out << j.dump() << '\n';
  }
}

void write_histogram_tsv(const std::string& path,
                         const std::vector<std::pair<size_t, size_t>>& bins) {
  auto out = open_out(path);
  for (const auto& [lower, count] : bins) {
    out << lower << '\t' << count << '\n';
  }
}

std::vector<std::string> read_surface_list(const std::string& path) {
  auto in = open_in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace emkit::corpus
