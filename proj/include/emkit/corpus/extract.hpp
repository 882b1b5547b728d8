#pragma once

#include <string>
#include <string_view>

#include "emkit/corpus/types.hpp"

namespace emkit::corpus {

// Turns a raw payload into a Document of the given source type. HTML loses
// tags, script/style bodies and gets its entities decoded; markdown loses
// formatting markers and link targets (link text stays); plain text passes
// through. Payloads that look binary yield an empty document, never an
// error.
Document extract_text(std::string_view raw, SourceType source,
                      std::string id = {});

// Exposed for the html path and its tests.
std::string strip_html(std::string_view html);
std::string strip_markdown(std::string_view md);

}  // namespace emkit::corpus
