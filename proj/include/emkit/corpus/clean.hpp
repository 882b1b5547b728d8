#pragma once

#include <string>
#include <string_view>

namespace emkit::corpus {

// Normalizes extracted text: strips residual XML/HTML tags, transliterates
// non-ASCII to closest ASCII (dropping what has no decomposition), removes
// control characters, collapses whitespace runs to a single space while
// keeping paragraph breaks (>= 2 newlines) as exactly one blank line, and
// trims the ends.
std::string clean_text(std::string_view text);

}  // namespace emkit::corpus
