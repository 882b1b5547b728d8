#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "emkit/embed/types.hpp"

namespace emkit::embed {

// Single-vector embedder (bi-encoder role). Instances are immutable and
// safe for concurrent calls; dims never changes over a lifetime.
class TextEmbedder {
 public:
  virtual ~TextEmbedder() = default;
  virtual DenseVector embed(std::string_view text, Role role) const = 0;
  virtual size_t dims() const = 0;
  // Order-preserving; backends may batch internally.
  virtual std::vector<DenseVector> embed_batch(
      const std::vector<std::string>& texts, Role role) const;
  virtual std::string name() const = 0;
};

// Per-token multi-vector embedder (late-interaction role).
class TokenEmbedder {
 public:
  virtual ~TokenEmbedder() = default;
  virtual MultiVector embed(std::string_view text, Role role) const = 0;
  virtual size_t dims() const = 0;
  virtual std::string name() const = 0;
};

// Joint (query, passage) scorer (cross-encoder role); higher is more
// relevant. Not symmetric.
class PairScorer {
 public:
  virtual ~PairScorer() = default;
  virtual double score(std::string_view query, std::string_view passage) const = 0;
  virtual std::string name() const = 0;
};

}  // namespace emkit::embed
