#include "emkit/qagen/prompt.hpp"

#include <fstream>
#include <sstream>

#include "emkit/error.hpp"

namespace emkit::qagen {

namespace {

constexpr const char* kKnown[] = {"text", "entity", "entity_type", "n"};

bool is_known_placeholder(const std::string& name) {
  for (const char* k : kKnown) {
    if (name == k) return true;
  }
  return false;
}

}  // namespace

PromptTemplate load_template(const std::string& name, const std::string& body) {
  PromptTemplate tmpl;
  tmpl.name = name;
  tmpl.body = body;
  bool has_text = false;
  size_t pos = 0;
  while ((pos = body.find('{', pos)) != std::string::npos) {
    size_t close = body.find('}', pos + 1);
    if (close == std::string::npos) break;
    std::string ph = body.substr(pos + 1, close - pos - 1);
    if (!is_known_placeholder(ph)) {
      throw InputError("template '" + name + "': unknown placeholder {" + ph +
                       "}");
    }
    if (ph == "text") has_text = true;
    if (ph == "entity") tmpl.requires_entity = true;
    pos = close + 1;
  }
  if (!has_text) {
    throw InputError("template '" + name + "': missing {text} placeholder");
  }
  return tmpl;
}

PromptTemplate load_template_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open template: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  if (auto dot = name.find_last_of('.'); dot != std::string::npos) {
    name = name.substr(0, dot);
  }
  return load_template(name, buf.str());
}

std::string render_prompt(const PromptTemplate& tmpl, const corpus::Chunk& chunk,
                          const std::optional<annotate::EntityMention>& entity,
                          int n) {
  if (tmpl.requires_entity && !entity) {
    throw InputError("template '" + tmpl.name + "' requires an entity");
  }
  if (!tmpl.requires_entity && entity) {
    throw InputError("template '" + tmpl.name +
                     "' takes no entity but one was supplied");
  }
  std::string out;
  out.reserve(tmpl.body.size() + chunk.text.size());
  size_t pos = 0;
  while (pos < tmpl.body.size()) {
    size_t open = tmpl.body.find('{', pos);
    if (open == std::string::npos) {
      out += tmpl.body.substr(pos);
      break;
    }
    size_t close = tmpl.body.find('}', open + 1);
    if (close == std::string::npos) {
      out += tmpl.body.substr(pos);
      break;
    }
    out += tmpl.body.substr(pos, open - pos);
    std::string ph = tmpl.body.substr(open + 1, close - open - 1);
    if (ph == "text") {
      out += chunk.text;
    } else if (ph == "entity") {
      out += entity->surface;
    } else if (ph == "entity_type") {
      out += entity ? entity->entity_type : "";
    } else if (ph == "n") {
      out += std::to_string(n);
    }
    pos = close + 1;
  }
  return out;
}

}  // namespace emkit::qagen
