#include "emkit/qagen/generate.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "emkit/error.hpp"
#include "emkit/text_util.hpp"

namespace emkit::qagen {

using nlohmann::json;

std::string to_string(QuestionType t) {
  switch (t) {
    case QuestionType::factual: return "factual";
    case QuestionType::clarification: return "clarification";
    case QuestionType::interpretation: return "interpretation";
    case QuestionType::scenario: return "scenario";
    case QuestionType::consequence: return "consequence";
    case QuestionType::extractive: return "extractive";
    case QuestionType::subjective: return "subjective";
    case QuestionType::reasoning: return "reasoning";
    case QuestionType::unknown: return "unknown";
  }
  return "unknown";
}

QuestionType question_type_from_label(const std::string& label) {
  // Fold "Scenario based", "consequence-related" etc. onto the bare kind.
  std::string folded;
  for (char c : label) {
    if (text::is_ascii_alnum(c)) {
      folded.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                            : c);
    }
  }
  auto strip_suffix = [&folded](const char* suffix) {
    std::string s(suffix);
    if (folded.size() > s.size() &&
        folded.compare(folded.size() - s.size(), s.size(), s) == 0) {
      folded.resize(folded.size() - s.size());
    }
  };
  strip_suffix("based");
  strip_suffix("related");
  if (folded == "factual") return QuestionType::factual;
  if (folded == "clarification") return QuestionType::clarification;
  if (folded == "interpretation") return QuestionType::interpretation;
  if (folded == "scenario") return QuestionType::scenario;
  if (folded == "consequence") return QuestionType::consequence;
  if (folded == "extractive") return QuestionType::extractive;
  if (folded == "subjective") return QuestionType::subjective;
  if (folded == "reasoning") return QuestionType::reasoning;
  return QuestionType::unknown;
}

std::vector<CandidateQuestion> parse_generation_response(
    const std::string& response, const std::string& chunk_id, int iteration) {
  std::vector<CandidateQuestion> out;
  std::istringstream in(response);
  std::string line;
  while (std::getline(in, line)) {
    size_t i = 0;
    while (i < line.size() && text::is_ascii_space(line[i])) ++i;
    size_t digits_begin = i;
    while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
    if (i == digits_begin) continue;  // not a numbered line
    if (i >= line.size() || (line[i] != '.' && line[i] != ')')) continue;
    ++i;
    while (i < line.size() && text::is_ascii_space(line[i])) ++i;
    std::string rest = line.substr(i);
    if (rest.empty()) continue;

    CandidateQuestion cand;
    cand.chunk_id = chunk_id;
    cand.iteration = iteration;
    cand.q_type = QuestionType::unknown;
    cand.question = rest;

    // "<TypeLabel>: <question>" -- only honored when the label is known;
    // questions containing colons stay intact otherwise.
    if (size_t colon = rest.find(':'); colon != std::string::npos) {
      QuestionType t = question_type_from_label(rest.substr(0, colon));
      if (t != QuestionType::unknown) {
        cand.q_type = t;
        size_t qbegin = colon + 1;
        while (qbegin < rest.size() && text::is_ascii_space(rest[qbegin])) {
          ++qbegin;
        }
        cand.question = rest.substr(qbegin);
      }
    }
    if (cand.question.empty()) continue;
    out.push_back(std::move(cand));
  }
  return out;
}

namespace {

// Context is whatever follows the first "CONTEXT:" marker, up to the
// EXAMPLE section when one is present.
std::string extract_context(const std::string& prompt) {
  size_t at = prompt.find("CONTEXT:");
  if (at == std::string::npos) return prompt;
  size_t begin = at + 8;
  size_t end = prompt.find("EXAMPLE", begin);
  std::string ctx = prompt.substr(begin, end == std::string::npos
                                             ? std::string::npos
                                             : end - begin);
  size_t b = 0, e = ctx.size();
  while (b < e && text::is_ascii_space(ctx[b])) ++b;
  while (e > b && text::is_ascii_space(ctx[e - 1])) --e;
  return ctx.substr(b, e - b);
}

std::optional<std::pair<std::string, std::string>> extract_entity(
    const std::string& prompt) {
  size_t at = prompt.find("around the entity '");
  if (at == std::string::npos) return std::nullopt;
  size_t sbegin = at + 19;
  size_t send = prompt.find('\'', sbegin);
  if (send == std::string::npos) return std::nullopt;
  std::string surface = prompt.substr(sbegin, send - sbegin);
  std::string type;
  size_t tat = prompt.find("of type ", send);
  if (tat != std::string::npos) {
    size_t tbegin = tat + 8;
    size_t tend = tbegin;
    while (tend < prompt.size() && prompt[tend] != '.' &&
           prompt[tend] != '\n') {
      ++tend;
    }
    type = prompt.substr(tbegin, tend - tbegin);
  }
  return std::make_pair(surface, type);
}

std::vector<std::string> split_sentences(const std::string& textbuf) {
  std::vector<std::string> sentences;
  std::string current;
  for (size_t i = 0; i < textbuf.size(); ++i) {
    char c = textbuf[i];
    current.push_back(c);
    bool boundary =
        (c == '.' || c == '?' || c == '!') &&
        (i + 1 >= textbuf.size() || text::is_ascii_space(textbuf[i + 1]));
    if (boundary || c == '\n') {
      size_t b = 0, e = current.size();
      while (b < e && text::is_ascii_space(current[b])) ++b;
      while (e > b && (text::is_ascii_space(current[e - 1]) ||
                       current[e - 1] == '.' || current[e - 1] == '?' ||
                       current[e - 1] == '!')) {
        --e;
      }
      if (e > b) sentences.push_back(current.substr(b, e - b));
      current.clear();
    }
  }
  size_t b = 0, e = current.size();
  while (b < e && text::is_ascii_space(current[b])) ++b;
  while (e > b && text::is_ascii_space(current[e - 1])) --e;
  if (e > b) sentences.push_back(current.substr(b, e - b));
  return sentences;
}

// Up to `want` informative words (longest-first bias, order preserved).
std::vector<std::string> content_words(const std::string& sentence,
                                       size_t want) {
  std::vector<std::string> words;
  std::istringstream in(sentence);
  std::string w;
  while (in >> w) {
    std::string stripped;
    for (char c : w) {
      if (text::is_ascii_alnum(c)) stripped.push_back(c);
    }
    if (stripped.size() >= 4) words.push_back(stripped);
  }
  if (words.size() > want) {
    // keep the `want` longest, preserving their original order
    std::vector<size_t> idx(words.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
      return words[x].size() > words[y].size();
    });
    idx.resize(want);
    std::sort(idx.begin(), idx.end());
    std::vector<std::string> kept;
    for (size_t i : idx) kept.push_back(words[i]);
    return kept;
  }
  return words;
}

class StubGenerationClient final : public GenerationClient {
 public:
  explicit StubGenerationClient(uint64_t seed) : seed_(seed) {}

  std::string generate_text(const GenerationRequest& request) override {
    std::string context = extract_context(request.prompt);
    auto entity = extract_entity(request.prompt);
    int n = requested_count(request.prompt);

    auto sentences = split_sentences(context);
    if (sentences.empty()) sentences.push_back("the passage");

    static const char* kLabels[] = {
        "Factual",        "Clarification", "Scenario based",
        "Reasoning based", "Extractive",    "Interpretation",
        "Consequence related", "Subjective"};
    static const char* kStems[] = {
        "What does the passage state about",
        "How would you explain",
        "Suppose a reader relies on this passage, what applies to",
        "Why does the passage mention",
        "Which detail is given about",
        "What can be inferred about",
        "What follows from the information on",
        "What is your assessment of"};

    uint64_t mix = seed_ ^ text::fnv1a64(context);
    text::SplitMix rng(mix ^ request.seed);
    std::ostringstream out;
    for (int i = 1; i <= n; ++i) {
      // Walk sentences from the tail: chunk overlap repeats the head, so
      // the tail is the fresh content.
      size_t sentence_index =
          sentences.size() - 1 -
          ((static_cast<size_t>(i) - 1 + rng.next_below(2)) % sentences.size());
      auto words = content_words(sentences[sentence_index], 3);
      std::string subject;
      for (const auto& w : words) {
        if (!subject.empty()) subject.push_back(' ');
        subject += w;
      }
      if (subject.empty()) subject = "this passage";
      size_t style = (static_cast<size_t>(i) - 1 + mix % 8) % 8;
      out << i << ". " << kLabels[style] << ": " << kStems[style] << " ";
      if (entity) out << entity->first << " and ";
      out << subject << "?\n";
    }
    return out.str();
  }

  std::string name() const override { return "stub"; }

 private:
  static int requested_count(const std::string& prompt) {
    size_t at = prompt.find("Generate ");
    if (at != std::string::npos) {
      size_t p = at + 9;
      int value = 0;
      bool any = false;
      while (p < prompt.size() && prompt[p] >= '0' && prompt[p] <= '9') {
        value = value * 10 + (prompt[p] - '0');
        ++p;
        any = true;
      }
      if (any && value > 0 && value <= 50) return value;
    }
    return 3;
  }

  uint64_t seed_;
};

class HttpGenerationClient final : public GenerationClient {
 public:
  explicit HttpGenerationClient(HttpGenerationConfig cfg)
      : cfg_(std::move(cfg)) {}

  std::string generate_text(const GenerationRequest& request) override {
    json body;
    body["prompt"] = request.prompt;
    body["max_tokens"] = request.max_tokens;
    body["temperature"] = request.temperature;
    body["seed"] = request.seed;

    int attempts = 0;
    int backoff_ms = 100;
    std::string last_error;
    while (attempts <= cfg_.retries) {
      ++attempts;
      httplib::Client client(cfg_.base_url);
      client.set_connection_timeout(0, cfg_.timeout_ms * 1000);
      client.set_read_timeout(0, cfg_.timeout_ms * 1000);
      if (!cfg_.auth_token.empty()) {
        client.set_bearer_token_auth(cfg_.auth_token);
      }
      auto res = client.Post("/v1/generate", body.dump(), "application/json");
      if (res && res->status == 200) {
        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded() || !reply.contains("text")) {
          throw TransportError("generation endpoint returned malformed JSON",
                               attempts);
        }
        return reply["text"].get<std::string>();
      }
      last_error = res ? "status " + std::to_string(res->status)
                       : "connection failure";
      if (attempts <= cfg_.retries) {
        std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
        backoff_ms *= 2;
      }
    }
    throw TransportError("generation request failed after " +
                             std::to_string(attempts) + " attempts: " +
                             last_error,
                         attempts);
  }

  std::string name() const override { return "http:" + cfg_.base_url; }

 private:
  HttpGenerationConfig cfg_;
};

}  // namespace

std::unique_ptr<GenerationClient> make_stub_generation_client(uint64_t seed) {
  return std::make_unique<StubGenerationClient>(seed);
}

std::unique_ptr<GenerationClient> make_http_generation_client(
    const HttpGenerationConfig& cfg) {
  return std::make_unique<HttpGenerationClient>(cfg);
}

GenerationResult generate(const corpus::Chunk& chunk, GenerationClient& client,
                          const PromptTemplate& tmpl,
                          const std::optional<annotate::EntityMention>& entity,
                          int n, int iteration) {
  GenerationRequest request;
  request.prompt = render_prompt(tmpl, chunk, entity, n);
  std::string response = client.generate_text(request);
  GenerationResult result;
  result.candidates = parse_generation_response(response, chunk.id, iteration);
  if (result.candidates.empty()) {
    result.diagnostic = "no numbered question lines in response (" +
                        std::to_string(response.size()) + " bytes)";
  }
  return result;
}

}  // namespace emkit::qagen
