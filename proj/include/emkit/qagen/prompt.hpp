#pragma once

#include <optional>
#include <string>

#include "emkit/annotate/annotate.hpp"
#include "emkit/corpus/types.hpp"

namespace emkit::qagen {

// A question-generation prompt with {text}, {entity}, {entity_type} and
// {n} placeholders. requires_entity is inferred at load from the presence
// of {entity}.
struct PromptTemplate {
  std::string name;
  std::string body;
  bool requires_entity = false;
};

// Validates placeholder names and the {text} requirement.
PromptTemplate load_template(const std::string& name, const std::string& body);
PromptTemplate load_template_file(const std::string& path);

// Substitutes all placeholders. Entity must be present exactly when the
// template requires one.
std::string render_prompt(const PromptTemplate& tmpl, const corpus::Chunk& chunk,
                          const std::optional<annotate::EntityMention>& entity,
                          int n);

}  // namespace emkit::qagen
