#include "emkit/corpus/mask.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "emkit/text_util.hpp"

namespace emkit::corpus {

namespace {

bool digit_adjacent(std::string_view text, size_t start, size_t end) {
  auto is_digit = [](char c) {
    return c >= '0' && c <= '9';
  };
  if (start > 0 && is_digit(text[start - 1])) return true;
  if (end < text.size() && is_digit(text[end])) return true;
  return false;
}

size_t count_digits(std::string_view s) {
  return static_cast<size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }));
}

std::vector<MaskSpan> regex_spans(std::string_view text, const std::regex& re,
                                  const char* kind) {
  std::vector<MaskSpan> out;
  auto begin = std::cregex_iterator(text.data(), text.data() + text.size(), re);
  for (auto it = begin; it != std::cregex_iterator(); ++it) {
    size_t start = static_cast<size_t>(it->position(0));
    size_t end = start + static_cast<size_t>(it->length(0));
    out.push_back({start, end, kind});
  }
  return out;
}

}  // namespace

bool luhn_check(std::string_view digits) {
  if (digits.empty()) return false;
  int sum = 0;
  bool dbl = false;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < '0' || *it > '9') return false;
    int d = *it - '0';
    if (dbl) {
      d *= 2;
      if (d > 9) d -= 9;
    }
    sum += d;
    dbl = !dbl;
  }
  return sum % 10 == 0;
}

std::vector<MaskSpan> find_emails(std::string_view text) {
  static const std::regex re(
      R"([A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,})");
  return regex_spans(text, re, "EMAIL");
}

std::vector<MaskSpan> find_phones(std::string_view text) {
  // International (+CC ...), parenthesized US area codes, and separated
  // US formats. Bare digit runs are left to the card recognizer.
  static const std::regex re(
      R"((\+\d{1,3}[ .-]?(\(\d{1,4}\)[ .-]?)?\d{1,5}([ .-]?\d{2,5}){1,4})|(\(\d{3}\)[ .-]?\d{3}[ .-]?\d{4})|(\d{3}[.-]\d{3}[.-]\d{4}))");
  std::vector<MaskSpan> out;
  for (auto& span : regex_spans(text, re, "PHONE")) {
    std::string_view body = text.substr(span.start, span.end - span.start);
    size_t digits = count_digits(body);
    if (digits < 7 || digits > 15) continue;
    if (digit_adjacent(text, span.start, span.end)) continue;
    out.push_back(span);
  }
  return out;
}

std::vector<MaskSpan> find_card_numbers(std::string_view text) {
  static const std::regex re(R"(\d(?:[ -]?\d){12,18})");
  std::vector<MaskSpan> out;
  for (auto& span : regex_spans(text, re, "CREDIT_CARD")) {
    if (digit_adjacent(text, span.start, span.end)) continue;
    std::string digits;
    for (char c : text.substr(span.start, span.end - span.start)) {
      if (c >= '0' && c <= '9') digits.push_back(c);
    }
    if (digits.size() < 13 || digits.size() > 19) continue;
    if (!luhn_check(digits)) continue;
    out.push_back(span);
  }
  return out;
}

std::vector<MaskSpan> find_ipv4(std::string_view text) {
  static const std::regex re(R"(\d{1,3}\.\d{1,3}\.\d{1,3}\.\d{1,3})");
  std::vector<MaskSpan> out;
  for (auto& span : regex_spans(text, re, "IPV4")) {
    if (digit_adjacent(text, span.start, span.end)) continue;
    // Reject when embedded in a longer dotted sequence (e.g. 1.2.3.4.5).
    if (span.end + 1 < text.size() && text[span.end] == '.' &&
        text[span.end + 1] >= '0' && text[span.end + 1] <= '9') {
      continue;
    }
    if (span.start >= 2 && text[span.start - 1] == '.' &&
        text[span.start - 2] >= '0' && text[span.start - 2] <= '9') {
      continue;
    }
    std::string_view body = text.substr(span.start, span.end - span.start);
    bool valid = true;
    size_t pos = 0;
    for (int octet = 0; octet < 4; ++octet) {
      size_t dot = body.find('.', pos);
      std::string_view part =
          body.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
      int v = 0;
      for (char c : part) v = v * 10 + (c - '0');
      if (v > 255) {
        valid = false;
        break;
      }
      pos = (dot == std::string_view::npos) ? body.size() : dot + 1;
    }
    if (valid) out.push_back(span);
  }
  return out;
}

MaskResult mask_pii(std::string_view original,
                    const std::vector<std::string>& extra_dictionary) {
  std::vector<MaskSpan> candidates;
  auto absorb = [&candidates](std::vector<MaskSpan> v) {
    candidates.insert(candidates.end(), v.begin(), v.end());
  };
  absorb(find_emails(original));
  absorb(find_phones(original));
  absorb(find_card_numbers(original));
  absorb(find_ipv4(original));

  for (const auto& surface : extra_dictionary) {
    if (surface.empty()) continue;
    size_t pos = 0;
    while ((pos = original.find(surface, pos)) != std::string_view::npos) {
      candidates.push_back({pos, pos + surface.size(), "DICT"});
      ++pos;  // overlapping repeats collapse in the merge below
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const MaskSpan& a, const MaskSpan& b) {
              if (a.start != b.start) return a.start < b.start;
              return a.end > b.end;
            });

  // Merge overlaps into maximal spans; the earliest (then longest)
  // constituent names the merged span.
  std::vector<MaskSpan> merged;
  for (const auto& span : candidates) {
    if (!merged.empty() && span.start < merged.back().end) {
      merged.back().end = std::max(merged.back().end, span.end);
    } else {
      merged.push_back(span);
    }
  }

  MaskResult result;
  result.spans = merged;
  result.masked.reserve(original.size());
  size_t cursor = 0;
  for (const auto& span : merged) {
    result.masked.append(original.substr(cursor, span.start - cursor));
    size_t chars =
        text::utf8_length(original.substr(span.start, span.end - span.start));
    result.masked.append(chars, '*');
    cursor = span.end;
  }
  result.masked.append(original.substr(cursor));
  return result;
}

}  // namespace emkit::corpus
