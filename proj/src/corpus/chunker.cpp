#include "emkit/corpus/chunker.hpp"

#include <algorithm>
#include <iostream>

#include "emkit/corpus/clean.hpp"
#include "emkit/corpus/tokenizer.hpp"
#include "emkit/error.hpp"
#include "emkit/text_util.hpp"

namespace emkit::corpus {

namespace {

// Pieces and chunks are ranges over the document's token array; chunk
// text is always a contiguous substring of the input, so token counts and
// reconstruction stay exact no matter where boundaries land.
struct TokenRange {
  size_t begin = 0;  // token indices, [begin, end)
  size_t end = 0;
  size_t size() const { return end - begin; }
};

// Token index of the first token starting at or after byte offset `pos`.
size_t token_at_or_after(const std::vector<TokenSpan>& tokens, size_t pos) {
  auto it = std::lower_bound(
      tokens.begin(), tokens.end(), pos,
      [](const TokenSpan& t, size_t p) { return t.start < p; });
  return static_cast<size_t>(it - tokens.begin());
}

void split_recursive(std::string_view text,
                     const std::vector<TokenSpan>& tokens, TokenRange range,
                     const std::vector<std::string>& delimiters, size_t level,
                     size_t budget, std::vector<TokenRange>& out) {
  if (range.size() == 0) return;
  if (range.size() <= budget) {
    out.push_back(range);
    return;
  }
  if (level >= delimiters.size() || delimiters[level].empty()) {
    // Token-level fallback: single tokens always fit.
    for (size_t i = range.begin; i < range.end; ++i) {
      out.push_back({i, i + 1});
    }
    return;
  }
  const std::string& delim = delimiters[level];
  // Byte window covered by this range.
  size_t byte_begin = tokens[range.begin].start;
  size_t byte_end = tokens[range.end - 1].end;
  std::vector<size_t> cut_tokens;  // token index where each part starts
  size_t search = byte_begin;
  while (search < byte_end) {
    size_t hit = text.find(delim, search);
    if (hit == std::string_view::npos || hit >= byte_end) break;
    // A cut lands after the delimiter; tokens straddling it go right.
    size_t cut = token_at_or_after(tokens, hit + delim.size());
    if (cut > range.begin && cut < range.end &&
        (cut_tokens.empty() || cut > cut_tokens.back())) {
      cut_tokens.push_back(cut);
    }
    search = hit + delim.size();
  }
  if (cut_tokens.empty()) {
    split_recursive(text, tokens, range, delimiters, level + 1, budget, out);
    return;
  }
  size_t prev = range.begin;
  for (size_t cut : cut_tokens) {
    split_recursive(text, tokens, {prev, cut}, delimiters, level + 1, budget,
                    out);
    prev = cut;
  }
  split_recursive(text, tokens, {prev, range.end}, delimiters, level + 1,
                  budget, out);
}

std::vector<TokenRange> greedy_merge(const std::vector<TokenRange>& pieces,
                                     size_t budget) {
  std::vector<TokenRange> cores;
  for (const auto& piece : pieces) {
    if (!cores.empty() &&
        piece.end - cores.back().begin <= budget) {
      cores.back().end = piece.end;
    } else {
      cores.push_back(piece);
    }
  }
  return cores;
}

Chunk make_chunk(std::string_view text, const std::vector<TokenSpan>& tokens,
                 size_t tok_begin, size_t tok_end, size_t overlap,
                 const std::string& doc_id, size_t seq) {
  Chunk c;
  c.doc_id = doc_id;
  c.seq = seq;
  c.id = doc_id + "#" + std::to_string(seq);
  size_t byte_begin = tokens[tok_begin].start;
  size_t byte_end = tokens[tok_end - 1].end;
  c.text = std::string(text.substr(byte_begin, byte_end - byte_begin));
  c.token_count = tok_end - tok_begin;
  c.overlap_prefix_tokens = overlap;
  return c;
}

}  // namespace

void validate_chunker_config(const ChunkerConfig& cfg) {
  if (cfg.max_tokens == 0) throw InputError("chunker: max_tokens must be positive");
  if (cfg.overlap_tokens >= cfg.max_tokens) {
    throw InputError("chunker: overlap_tokens must be less than max_tokens");
  }
  if (cfg.delimiters.empty() || !cfg.delimiters.back().empty()) {
    throw InputError("chunker: delimiter list must end with the \"\" fallback");
  }
}

void warn_if_overlap_unusual(const ChunkerConfig& cfg) {
  if (cfg.overlap_tokens < 40 || cfg.overlap_tokens > 70) {
    std::cerr << "warning: overlap_tokens=" << cfg.overlap_tokens
              << " outside the recommended [40, 70] band\n";
  }
}

std::vector<std::string> split_paragraphs(std::string_view text) {
  // A paragraph is a maximal run of non-blank lines; a blank line is
  // whitespace-only. Tolerates irregular blank-line runs in uncleaned
  // input.
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    size_t b = 0, e = current.size();
    while (b < e && text::is_ascii_space(current[b])) ++b;
    while (e > b && text::is_ascii_space(current[e - 1])) --e;
    if (e > b) out.push_back(current.substr(b, e - b));
    current.clear();
  };
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    bool blank = true;
    for (char c : line) {
      if (!text::is_ascii_space(c)) {
        blank = false;
        break;
      }
    }
    if (blank) {
      flush();
    } else {
      if (!current.empty()) current.push_back('\n');
      current += std::string(line);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  flush();
  return out;
}

std::vector<Chunk> chunk_text(std::string_view text, const ChunkerConfig& cfg,
                              const std::string& doc_id, size_t first_seq) {
  validate_chunker_config(cfg);
  auto tokens = tokenize_spans(text);
  std::vector<Chunk> chunks;
  if (tokens.empty()) return chunks;

  if (tokens.size() <= cfg.max_tokens) {
    chunks.push_back(make_chunk(text, tokens, 0, tokens.size(), 0, doc_id,
                                first_seq));
    return chunks;
  }

  // Cores leave room for the overlap prefix added afterwards.
  size_t core_budget = cfg.max_tokens - cfg.overlap_tokens;
  std::vector<TokenRange> pieces;
  split_recursive(text, tokens, {0, tokens.size()}, cfg.delimiters, 0,
                  core_budget, pieces);
  std::vector<TokenRange> cores = greedy_merge(pieces, core_budget);

  size_t prev_begin = 0;  // token start of the previous chunk (incl. prefix)
  for (size_t i = 0; i < cores.size(); ++i) {
    size_t overlap = 0;
    size_t start = cores[i].begin;
    if (i > 0) {
      size_t prev_count = cores[i - 1].end - prev_begin;
      overlap = std::min(cfg.overlap_tokens, prev_count);
      start = cores[i].begin - overlap;
    }
    chunks.push_back(make_chunk(text, tokens, start, cores[i].end, overlap,
                                doc_id, first_seq + i));
    prev_begin = start;
  }
  return chunks;
}

std::vector<Chunk> chunk_document(const Document& doc,
                                  const ChunkerConfig& cfg) {
  std::vector<Chunk> out;
  std::string cleaned = clean_text(doc.text);
  size_t seq = 0;
  for (const auto& para : split_paragraphs(cleaned)) {
    auto part = chunk_text(para, cfg, doc.id, seq);
    seq += part.size();
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Chunk> denormalize_records(const StructuredRecord& record,
                                       const ChunkerConfig& cfg,
                                       const std::string& doc_id) {
  validate_chunker_config(cfg);
  if (record.fields.empty()) {
    throw InputError("denormalize: record has no fields");
  }
  for (const auto& key : record.key_fields) {
    bool found = false;
    for (const auto& [k, v] : record.fields) {
      if (k == key) {
        found = true;
        break;
      }
    }
    if (!found) throw InputError("denormalize: key_field '" + key +
                                 "' missing from record fields");
  }

  auto render_line = [](const std::string& k, const std::string& v) {
    return k + ": " + v;
  };
  std::vector<std::string> key_lines;
  std::string rendered;
  for (const auto& [k, v] : record.fields) {
    if (!rendered.empty()) rendered.push_back('\n');
    rendered += render_line(k, v);
  }
  for (const auto& key : record.key_fields) {
    for (const auto& [k, v] : record.fields) {
      if (k == key) key_lines.push_back(render_line(k, v));
    }
  }
  std::string key_block;
  for (const auto& line : key_lines) {
    key_block += line;
    key_block.push_back('\n');
  }
  size_t key_tokens = count_tokens(key_block);

  if (count_tokens(rendered) <= cfg.max_tokens) {
    auto chunks = chunk_text(rendered, cfg, doc_id);
    return chunks;  // single chunk holding every line
  }
  if (key_tokens >= cfg.max_tokens) {
    throw InputError(
        "denormalize: key_field lines alone exceed the chunk budget");
  }

  // Budget content so the duplicated key block always fits on top.
  ChunkerConfig inner = cfg;
  inner.max_tokens = cfg.max_tokens - key_tokens;
  inner.overlap_tokens = std::min(cfg.overlap_tokens, inner.max_tokens - 1);
  auto chunks = chunk_text(rendered, inner, doc_id);
  if (chunks.empty()) {
    throw InputError("denormalize: no room for content under the key lines");
  }

  for (auto& chunk : chunks) {
    std::string missing;
    for (const auto& line : key_lines) {
      if (chunk.text.find(line) == std::string::npos) {
        missing += line;
        missing.push_back('\n');
      }
    }
    if (!missing.empty()) {
      chunk.text = missing + chunk.text;
      chunk.token_count = count_tokens(chunk.text);
      // Leading tokens are key context now, not predecessor tail.
      chunk.overlap_prefix_tokens = 0;
    }
    if (chunk.token_count > cfg.max_tokens) {
      throw InvariantError("denormalize: budget exceeded after key prefixing");
    }
  }
  return chunks;
}

std::vector<std::pair<size_t, size_t>> chunk_histogram(
    const std::vector<Chunk>& chunks, size_t bin_width) {
  if (bin_width == 0) throw InputError("histogram: bin_width must be >= 1");
  std::vector<std::pair<size_t, size_t>> bins;
  if (chunks.empty()) return bins;
  size_t max_count = 0;
  for (const auto& c : chunks) max_count = std::max(max_count, c.token_count);
  bins.resize(max_count / bin_width + 1);
  for (size_t i = 0; i < bins.size(); ++i) {
    bins[i] = {i * bin_width, 0};
  }
  for (const auto& c : chunks) {
    bins[c.token_count / bin_width].second += 1;
  }
  return bins;
}

}  // namespace emkit::corpus
