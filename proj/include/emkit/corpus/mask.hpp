#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "emkit/corpus/types.hpp"

namespace emkit::corpus {

struct MaskResult {
  std::string masked;
  std::vector<MaskSpan> spans;  // offsets against the original text
};

// Pattern + dictionary PII masking. Built-in recognizers: EMAIL, PHONE
// (international and US formats), CREDIT_CARD (13-19 digit runs passing
// the Luhn check), IPV4. Dictionary surfaces match anywhere, not just at
// word boundaries, so a name embedded in a longer word still disappears.
// Overlapping detections merge into maximal spans; each span is replaced
// by '*' repeated to its character length, so offsets stay valid.
MaskResult mask_pii(std::string_view original,
                    const std::vector<std::string>& extra_dictionary = {});

// Single-pattern hooks, exposed for tests and for extending the
// recognizer set.
std::vector<MaskSpan> find_emails(std::string_view text);
std::vector<MaskSpan> find_phones(std::string_view text);
std::vector<MaskSpan> find_card_numbers(std::string_view text);
std::vector<MaskSpan> find_ipv4(std::string_view text);

bool luhn_check(std::string_view digits);

}  // namespace emkit::corpus
