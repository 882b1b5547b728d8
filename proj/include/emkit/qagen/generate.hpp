#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "emkit/annotate/annotate.hpp"
#include "emkit/corpus/types.hpp"
#include "emkit/qagen/prompt.hpp"

namespace emkit::qagen {

enum class QuestionType {
  factual,
  clarification,
  interpretation,
  scenario,
  consequence,
  extractive,
  subjective,
  reasoning,
  unknown,
};

std::string to_string(QuestionType t);
QuestionType question_type_from_label(const std::string& label);

struct CandidateQuestion {
  std::string chunk_id;
  std::string question;
  QuestionType q_type = QuestionType::unknown;
  int iteration = 1;
};

struct GenerationRequest {
  std::string prompt;
  int max_tokens = 512;
  double temperature = 0.0;
  uint64_t seed = 0;
};

// Contract for text generation backends: POST /v1/generate
// {prompt, max_tokens, temperature, seed} -> {text}. The stub fills it
// offline and deterministically.
class GenerationClient {
 public:
  virtual ~GenerationClient() = default;
  virtual std::string generate_text(const GenerationRequest& request) = 0;
  virtual std::string name() const = 0;
};

// Deterministic offline generator: cloze-style questions built from the
// context sentences of the prompt, emitted as a numbered typed list.
std::unique_ptr<GenerationClient> make_stub_generation_client(uint64_t seed);

struct HttpGenerationConfig {
  std::string base_url;  // e.g. http://localhost:8089
  std::string auth_token;
  int timeout_ms = 30000;
  int retries = 3;
};
std::unique_ptr<GenerationClient> make_http_generation_client(
    const HttpGenerationConfig& cfg);

// Parses "<index>. <TypeLabel>: <question>" lines; numbered lines without
// a recognized label become q_type = unknown; everything else is dropped.
std::vector<CandidateQuestion> parse_generation_response(
    const std::string& response, const std::string& chunk_id, int iteration);

struct GenerationResult {
  std::vector<CandidateQuestion> candidates;
  std::string diagnostic;  // set when the response had no usable lines
};

// Renders the prompt, drives the client, parses the response. Transport
// failures surface as TransportError; an unparseable response is an empty
// result with a diagnostic, not an error.
GenerationResult generate(const corpus::Chunk& chunk, GenerationClient& client,
                          const PromptTemplate& tmpl,
                          const std::optional<annotate::EntityMention>& entity,
                          int n, int iteration = 1);

}  // namespace emkit::qagen
