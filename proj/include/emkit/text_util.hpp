#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace emkit::text {

// Decodes one UTF-8 codepoint starting at `pos`. Invalid sequences decode
// as U+FFFD and consume a single byte. Returns the codepoint and advances
// `pos` past the consumed bytes.
uint32_t decode_utf8(std::string_view s, size_t& pos);

// Replaces invalid UTF-8 sequences with U+FFFD so downstream code can
// assume well-formed input.
std::string sanitize_utf8(std::string_view raw);

// Number of codepoints in a well-formed UTF-8 string.
size_t utf8_length(std::string_view s);

// Closest-ASCII transliteration for one codepoint. Returns an empty
// string when no standard decomposition exists (caller drops the char).
std::string_view ascii_fold(uint32_t cp);

bool is_ascii_alnum(char c);
bool is_ascii_space(char c);
std::string to_lower_ascii(std::string_view s);

// True when s[start..end) sits on word boundaries: the neighbouring
// bytes, when present, are not alphanumeric.
bool on_word_boundary(std::string_view s, size_t start, size_t end);

std::string base64_encode(const unsigned char* data, size_t len);
std::vector<unsigned char> base64_decode(std::string_view encoded);

// Deterministic 64-bit hashing/RNG used by all seeded components.
// Fixed algorithms so outputs are identical across platforms.
uint64_t fnv1a64(std::string_view s);
uint64_t splitmix64(uint64_t& state);

class SplitMix {
 public:
  explicit SplitMix(uint64_t seed) : state_(seed) {}
  uint64_t next() { return splitmix64(state_); }
  // Uniform in [0, 1).
  double next_double();
  // Uniform in [0, bound) without modulo bias.
  uint64_t next_below(uint64_t bound);
  // Standard normal via Box-Muller.
  double next_gaussian();

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Fisher-Yates with a SplitMix stream; std::shuffle is implementation
// defined so it cannot back a determinism contract.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, uint64_t seed) {
  SplitMix rng(seed);
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace emkit::text
