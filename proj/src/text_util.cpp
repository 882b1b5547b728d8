#include "emkit/text_util.hpp"

#include <cmath>
#include <unordered_map>

#include "emkit/error.hpp"

namespace emkit::text {

namespace {

constexpr uint32_t kReplacement = 0xFFFD;

}  // namespace

uint32_t decode_utf8(std::string_view s, size_t& pos) {
  const auto byte = [&](size_t i) { return static_cast<unsigned char>(s[i]); };
  unsigned char b0 = byte(pos);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  size_t len = 0;
  uint32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + len > s.size()) {
    ++pos;
    return kReplacement;
  }
  for (size_t i = 1; i < len; ++i) {
    unsigned char b = byte(pos + i);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong encodings and surrogate range.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
      cp > 0x10FFFF) {
    ++pos;
    return kReplacement;
  }
  pos += len;
  return cp;
}

namespace {

void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::string sanitize_utf8(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  size_t pos = 0;
  while (pos < raw.size()) {
    uint32_t cp = decode_utf8(raw, pos);
    append_utf8(out, cp);
  }
  return out;
}

size_t utf8_length(std::string_view s) {
  size_t pos = 0, n = 0;
  while (pos < s.size()) {
    decode_utf8(s, pos);
    ++n;
  }
  return n;
}

std::string_view ascii_fold(uint32_t cp) {
  // Common Latin-1 / Latin Extended-A decompositions plus typographic
  // punctuation. Anything absent here is dropped by clean_text.
  static const std::unordered_map<uint32_t, std::string_view> kFold = {
      {0x00C0, "A"}, {0x00C1, "A"}, {0x00C2, "A"}, {0x00C3, "A"},
      {0x00C4, "A"}, {0x00C5, "A"}, {0x00C6, "AE"}, {0x00C7, "C"},
      {0x00C8, "E"}, {0x00C9, "E"}, {0x00CA, "E"}, {0x00CB, "E"},
      {0x00CC, "I"}, {0x00CD, "I"}, {0x00CE, "I"}, {0x00CF, "I"},
      {0x00D0, "D"}, {0x00D1, "N"}, {0x00D2, "O"}, {0x00D3, "O"},
      {0x00D4, "O"}, {0x00D5, "O"}, {0x00D6, "O"}, {0x00D8, "O"},
      {0x00D9, "U"}, {0x00DA, "U"}, {0x00DB, "U"}, {0x00DC, "U"},
      {0x00DD, "Y"}, {0x00DF, "ss"},
      {0x00E0, "a"}, {0x00E1, "a"}, {0x00E2, "a"}, {0x00E3, "a"},
      {0x00E4, "a"}, {0x00E5, "a"}, {0x00E6, "ae"}, {0x00E7, "c"},
      {0x00E8, "e"}, {0x00E9, "e"}, {0x00EA, "e"}, {0x00EB, "e"},
      {0x00EC, "i"}, {0x00ED, "i"}, {0x00EE, "i"}, {0x00EF, "i"},
      {0x00F1, "n"}, {0x00F2, "o"}, {0x00F3, "o"}, {0x00F4, "o"},
      {0x00F5, "o"}, {0x00F6, "o"}, {0x00F8, "o"}, {0x00F9, "u"},
      {0x00FA, "u"}, {0x00FB, "u"}, {0x00FC, "u"}, {0x00FD, "y"},
      {0x00FF, "y"},
      {0x0100, "A"}, {0x0101, "a"}, {0x0102, "A"}, {0x0103, "a"},
      {0x0106, "C"}, {0x0107, "c"}, {0x010C, "C"}, {0x010D, "c"},
      {0x010E, "D"}, {0x010F, "d"}, {0x0112, "E"}, {0x0113, "e"},
      {0x011A, "E"}, {0x011B, "e"}, {0x011E, "G"}, {0x011F, "g"},
      {0x0130, "I"}, {0x0131, "i"}, {0x0141, "L"}, {0x0142, "l"},
      {0x0143, "N"}, {0x0144, "n"}, {0x0147, "N"}, {0x0148, "n"},
      {0x014C, "O"}, {0x014D, "o"}, {0x0150, "O"}, {0x0151, "o"},
      {0x0152, "OE"}, {0x0153, "oe"}, {0x0158, "R"}, {0x0159, "r"},
      {0x015A, "S"}, {0x015B, "s"}, {0x015E, "S"}, {0x015F, "s"},
      {0x0160, "S"}, {0x0161, "s"}, {0x0164, "T"}, {0x0165, "t"},
      {0x016A, "U"}, {0x016B, "u"}, {0x016E, "U"}, {0x016F, "u"},
      {0x0170, "U"}, {0x0171, "u"}, {0x0179, "Z"}, {0x017A, "z"},
      {0x017B, "Z"}, {0x017C, "z"}, {0x017D, "Z"}, {0x017E, "z"},
      // Typographic punctuation.
      {0x2010, "-"}, {0x2011, "-"}, {0x2012, "-"}, {0x2013, "-"},
      {0x2014, "-"}, {0x2015, "-"}, {0x2018, "'"}, {0x2019, "'"},
      {0x201A, "'"}, {0x201C, "\""}, {0x201D, "\""}, {0x201E, "\""},
      {0x2026, "..."}, {0x2032, "'"}, {0x2033, "\""}, {0x00AB, "\""},
      {0x00BB, "\""}, {0x00A0, " "}, {0x2002, " "}, {0x2003, " "},
      {0x2009, " "}, {0x00D7, "x"}, {0x2212, "-"},
  };
  auto it = kFold.find(cp);
  if (it == kFold.end()) return {};
  return it->second;
}

bool is_ascii_alnum(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') ||
         (u >= 'A' && u <= 'Z');
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool on_word_boundary(std::string_view s, size_t start, size_t end) {
  bool left_ok = start == 0 || !is_ascii_alnum(s[start - 1]);
  bool right_ok = end >= s.size() || !is_ascii_alnum(s[end]);
  return left_ok && right_ok;
}

namespace {
constexpr char kB64Chars[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
}

std::string base64_encode(const unsigned char* data, size_t len) {
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  for (size_t i = 0; i < len; i += 3) {
    uint32_t v = static_cast<uint32_t>(data[i]) << 16;
    if (i + 1 < len) v |= static_cast<uint32_t>(data[i + 1]) << 8;
    if (i + 2 < len) v |= static_cast<uint32_t>(data[i + 2]);
    out.push_back(kB64Chars[(v >> 18) & 0x3F]);
    out.push_back(kB64Chars[(v >> 12) & 0x3F]);
    out.push_back(i + 1 < len ? kB64Chars[(v >> 6) & 0x3F] : '=');
    out.push_back(i + 2 < len ? kB64Chars[v & 0x3F] : '=');
  }
  return out;
}

std::vector<unsigned char> base64_decode(std::string_view encoded) {
  static const auto value_of = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
  };
  std::vector<unsigned char> out;
  out.reserve(encoded.size() / 4 * 3);
  uint32_t buf = 0;
  int bits = 0;
  for (char c : encoded) {
    if (c == '=' || c == '\n' || c == '\r') continue;
    int v = value_of(c);
    if (v < 0) throw InputError("base64: invalid character in input");
    buf = (buf << 6) | static_cast<uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<unsigned char>((buf >> bits) & 0xFF));
    }
  }
  return out;
}

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97f4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

uint64_t SplitMix::next_below(uint64_t bound) {
  if (bound == 0) throw InvariantError("next_below: zero bound");
  uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double SplitMix::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = next_double();
  } while (u1 <= 0.0);
  double u2 = next_double();
  double mag = std::sqrt(-2.0 * std::log(u1));
  spare_ = mag * std::sin(2.0 * M_PI * u2);
  have_spare_ = true;
  return mag * std::cos(2.0 * M_PI * u2);
}

}  // namespace emkit::text
