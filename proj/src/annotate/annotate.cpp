#include "emkit/annotate/annotate.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <tuple>

#include <json.hpp>

#include "emkit/error.hpp"
#include "emkit/text_util.hpp"

namespace emkit::annotate {

using nlohmann::json;

std::vector<EntityMention> pre_annotate(const corpus::Chunk& chunk,
                                        const std::vector<EntityDictEntry>& dict,
                                        bool case_insensitive) {
  if (dict.empty()) throw InputError("pre_annotate: dictionary is empty");

  const std::string& original = chunk.text;
  const std::string haystack =
      case_insensitive ? text::to_lower_ascii(original) : original;

  std::vector<EntityMention> candidates;
  for (const auto& entry : dict) {
    if (entry.surface.empty()) continue;
    const std::string needle =
        case_insensitive ? text::to_lower_ascii(entry.surface) : entry.surface;
    size_t pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
      size_t end = pos + needle.size();
      if (text::on_word_boundary(original, pos, end)) {
        EntityMention m;
        m.chunk_id = chunk.id;
        m.start = pos;
        m.end = end;
        m.surface = original.substr(pos, needle.size());
        m.entity_type = entry.entity_type;
        candidates.push_back(std::move(m));
      }
      ++pos;
    }
  }

  // Longest surface wins, then earliest start; entity_type keeps the
  // order total when two dictionary rows share a span.
  std::sort(candidates.begin(), candidates.end(),
            [](const EntityMention& a, const EntityMention& b) {
              size_t la = a.end - a.start, lb = b.end - b.start;
              if (la != lb) return la > lb;
              if (a.start != b.start) return a.start < b.start;
              return a.entity_type < b.entity_type;
            });

  std::vector<EntityMention> kept;
  for (auto& cand : candidates) {
    bool overlaps = false;
    for (const auto& k : kept) {
      if (cand.start < k.end && k.start < cand.end) {
        overlaps = true;
        break;
      }
    }
    if (!overlaps) kept.push_back(std::move(cand));
  }

  std::sort(kept.begin(), kept.end(),
            [](const EntityMention& a, const EntityMention& b) {
              return a.start < b.start;
            });
  return kept;
}

std::vector<AnnotationBatch> make_batches(
    const std::vector<std::string>& chunk_ids, size_t batch_size,
    const std::vector<std::string>& annotator_pool) {
  if (annotator_pool.size() < 3) {
    throw InputError("make_batches: unanimity needs at least 3 annotators");
  }
  if (batch_size == 0) throw InputError("make_batches: batch_size must be >= 1");

  std::vector<AnnotationBatch> batches;
  size_t n_batches = (chunk_ids.size() + batch_size - 1) / batch_size;
  for (size_t b = 0; b < n_batches; ++b) {
    AnnotationBatch batch;
    char idbuf[32];
    std::snprintf(idbuf, sizeof(idbuf), "batch-%04zu", b);
    batch.batch_id = idbuf;
    size_t begin = b * batch_size;
    size_t end = std::min(begin + batch_size, chunk_ids.size());
    batch.chunk_ids.assign(chunk_ids.begin() + static_cast<long>(begin),
                           chunk_ids.begin() + static_cast<long>(end));
    for (size_t j = 0; j < 3; ++j) {
      batch.annotators.push_back(
          annotator_pool[(b * 3 + j) % annotator_pool.size()]);
    }
    batches.push_back(std::move(batch));
  }
  return batches;
}

std::vector<EntityMention> merge_unanimous(const std::vector<EntityMention>& a,
                                           const std::vector<EntityMention>& b,
                                           const std::vector<EntityMention>& c) {
  using Key = std::tuple<std::string, size_t, size_t, std::string>;
  auto key_of = [](const EntityMention& m) {
    return Key{m.chunk_id, m.start, m.end, m.entity_type};
  };
  auto key_set = [&](const std::vector<EntityMention>& v) {
    std::set<Key> s;
    for (const auto& m : v) s.insert(key_of(m));
    return s;
  };
  std::set<Key> sb = key_set(b), sc = key_set(c);

  std::vector<EntityMention> merged;
  std::set<Key> emitted;
  for (const auto& m : a) {
    Key k = key_of(m);
    if (sb.count(k) && sc.count(k) && !emitted.count(k)) {
      EntityMention out = m;
      out.annotator = "merged";
      merged.push_back(std::move(out));
      emitted.insert(k);
    }
  }
  std::sort(merged.begin(), merged.end(),
            [](const EntityMention& x, const EntityMention& y) {
              if (x.chunk_id != y.chunk_id) return x.chunk_id < y.chunk_id;
              if (x.start != y.start) return x.start < y.start;
              return x.end < y.end;
            });
  return merged;
}

namespace {

// Minimal CSV field splitter with double-quote escaping.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(field);
  return fields;
}

std::string trim_ws(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && text::is_ascii_space(s[b])) ++b;
  while (e > b && text::is_ascii_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::vector<EntityDictEntry> read_entity_dict_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open entity dictionary: " + path);
  std::vector<EntityDictEntry> dict;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (line_no == 1 && fields.size() >= 2 && fields[0] == "surface") continue;
    if (fields.size() < 2) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": expected surface,entity_type");
    }
    EntityDictEntry entry{trim_ws(fields[0]), trim_ws(fields[1])};
    if (entry.surface.empty() || entry.entity_type.empty()) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": empty surface or entity_type");
    }
    if (!seen.insert({entry.surface, entry.entity_type}).second) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": duplicate dictionary entry '" + entry.surface + "'");
    }
    dict.push_back(std::move(entry));
  }
  return dict;
}

std::vector<EntityMention> read_mentions_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open mentions file: " + path);
  std::vector<EntityMention> out;
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
    EntityMention m;
    m.chunk_id = j.at("chunk_id").get<std::string>();
    m.start = j.at("start").get<size_t>();
    m.end = j.at("end").get<size_t>();
    m.surface = j.at("surface").get<std::string>();
    m.entity_type = j.at("entity_type").get<std::string>();
    m.annotator = j.value("annotator", "auto");
    out.push_back(std::move(m));
  }
  return out;
}

void write_mentions_jsonl(const std::string& path,
                          const std::vector<EntityMention>& mentions) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  for (const auto& m : mentions) {
    json j;
    j["chunk_id"] = m.chunk_id;
    j["start"] = m.start;
    j["end"] = m.end;
    j["surface"] = m.surface;
    j["entity_type"] = m.entity_type;
    j["annotator"] = m.annotator;
    out << j.dump() << '\n';
  }
}

std::vector<AnnotationBatch> read_batches_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open batches file: " + path);
  std::vector<AnnotationBatch> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    AnnotationBatch b;
    b.batch_id = j.at("batch_id").get<std::string>();
    for (auto& id : j.at("chunk_ids")) b.chunk_ids.push_back(id.get<std::string>());
    for (auto& a : j.at("annotators")) b.annotators.push_back(a.get<std::string>());
    out.push_back(std::move(b));
  }
  return out;
}

void write_batches_jsonl(const std::string& path,
                         const std::vector<AnnotationBatch>& batches) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  for (const auto& b : batches) {
    json j;
    j["batch_id"] = b.batch_id;
    j["chunk_ids"] = b.chunk_ids;
    j["annotators"] = b.annotators;
    out << j.dump() << '\n';
  }
}

}  // namespace emkit::annotate
