#include "emkit/corpus/extract.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "emkit/error.hpp"
#include "emkit/text_util.hpp"

namespace emkit::corpus {

namespace {

bool looks_binary(std::string_view raw) {
  if (raw.empty()) return false;
  size_t window = std::min<size_t>(raw.size(), 4096);
  size_t suspicious = 0;
  for (size_t i = 0; i < window; ++i) {
    unsigned char c = static_cast<unsigned char>(raw[i]);
    if (c == 0) return true;
    if (c < 0x20 && c != '\t' && c != '\n' && c != '\r') ++suspicious;
  }
  return suspicious * 10 > window;
}

std::string decode_entities(std::string_view s) {
  static const std::unordered_map<std::string, std::string> kNamed = {
      {"amp", "&"},    {"lt", "<"},      {"gt", ">"},     {"quot", "\""},
      {"apos", "'"},   {"nbsp", " "},    {"copy", "(c)"}, {"reg", "(r)"},
      {"trade", "(tm)"}, {"hellip", "..."}, {"mdash", "-"}, {"ndash", "-"},
      {"lsquo", "'"},  {"rsquo", "'"},   {"ldquo", "\""}, {"rdquo", "\""},
      {"bull", "*"},   {"middot", "*"},  {"times", "x"},  {"divide", "/"},
  };
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back(s[i++]);
      continue;
    }
    std::string name(s.substr(i + 1, semi - i - 1));
    if (!name.empty() && name[0] == '#') {
      uint32_t cp = 0;
      try {
        cp = (name.size() > 1 && (name[1] == 'x' || name[1] == 'X'))
                 ? static_cast<uint32_t>(std::stoul(name.substr(2), nullptr, 16))
                 : static_cast<uint32_t>(std::stoul(name.substr(1)));
      } catch (...) {
        out.push_back(s[i++]);
        continue;
      }
      if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
      } else {
        auto folded = text::ascii_fold(cp);
        out += folded;  // empty when there is no ASCII equivalent
      }
      i = semi + 1;
    } else if (auto it = kNamed.find(name); it != kNamed.end()) {
      out += it->second;
      i = semi + 1;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

std::string tag_name_of(std::string_view tag_body) {
  size_t j = 0;
  if (j < tag_body.size() && tag_body[j] == '/') ++j;
  size_t start = j;
  while (j < tag_body.size() &&
         (text::is_ascii_alnum(tag_body[j]) || tag_body[j] == '!')) {
    ++j;
  }
  return text::to_lower_ascii(tag_body.substr(start, j - start));
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && text::is_ascii_space(s[b])) ++b;
  while (e > b && text::is_ascii_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string strip_html(std::string_view html) {
  static const std::unordered_set<std::string> kBlock = {
      "p",  "div", "br",  "li", "ul", "ol",    "tr",     "table", "h1",
      "h2", "h3",  "h4",  "h5", "h6", "title", "header", "footer",
      "section", "article", "blockquote", "pre", "hr"};
  std::string out;
  out.reserve(html.size());
  size_t i = 0;
  const size_t n = html.size();
  while (i < n) {
    if (html[i] != '<') {
      out.push_back(html[i++]);
      continue;
    }
    // Comments.
    if (html.compare(i, 4, "<!--") == 0) {
      size_t close = html.find("-->", i + 4);
      i = (close == std::string_view::npos) ? n : close + 3;
      continue;
    }
    size_t close = html.find('>', i + 1);
    if (close == std::string_view::npos) {
      out.push_back(html[i++]);
      continue;
    }
    std::string_view body = html.substr(i + 1, close - i - 1);
    std::string name = tag_name_of(body);
    if (name == "script" || name == "style") {
      // Drop the element body too.
      std::string closer = "</" + name;
      size_t end = text::to_lower_ascii(html).find(closer, close + 1);
      if (end == std::string::npos) {
        i = n;
      } else {
        size_t end_close = html.find('>', end);
        i = (end_close == std::string_view::npos) ? n : end_close + 1;
      }
      continue;
    }
    if (kBlock.count(name)) out.push_back('\n');
    i = close + 1;
  }
  return trim(decode_entities(out));
}

std::string strip_markdown(std::string_view md) {
  std::istringstream in{std::string(md)};
  std::string line;
  std::ostringstream joined;
  bool in_fence = false;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    // Fence lines toggle code mode; code bodies stay, markers go.
    if (t.rfind("```", 0) == 0 || t.rfind("~~~", 0) == 0) {
      in_fence = !in_fence;
      continue;
    }
    if (!in_fence) {
      // Horizontal rules.
      if (!t.empty() &&
          t.find_first_not_of("-*_ ") == std::string::npos &&
          t.size() >= 3) {
        line.clear();
        goto emit;
      }
      {
        size_t p = 0;
        while (p < line.size() && line[p] == ' ') ++p;
        // Headers.
        size_t h = p;
        while (h < line.size() && line[h] == '#') ++h;
        if (h > p && h < line.size() && line[h] == ' ') {
          line = line.substr(h + 1);
          goto inline_pass;
        }
        // Blockquotes.
        if (p < line.size() && line[p] == '>') {
          size_t q = p;
          while (q < line.size() && (line[q] == '>' || line[q] == ' ')) ++q;
          line = line.substr(q);
          goto inline_pass;
        }
        // List bullets.
        if (p + 1 < line.size() &&
            (line[p] == '-' || line[p] == '*' || line[p] == '+') &&
            line[p + 1] == ' ') {
          line = line.substr(p + 2);
          goto inline_pass;
        }
        // Numbered lists.
        size_t d = p;
        while (d < line.size() && std::isdigit(static_cast<unsigned char>(line[d]))) ++d;
        if (d > p && d + 1 < line.size() && line[d] == '.' && line[d + 1] == ' ') {
          line = line.substr(d + 2);
        }
      }
    inline_pass:
      std::string tmp;
      tmp.reserve(line.size());
      for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        // Images: drop the bang, fall through to link handling.
        if (c == '!' && i + 1 < line.size() && line[i + 1] == '[') continue;
        if (c == '[') {
          size_t rb = line.find(']', i + 1);
          if (rb != std::string::npos) {
            std::string inner = line.substr(i + 1, rb - i - 1);
            size_t after = rb + 1;
            if (after < line.size() && line[after] == '(') {
              size_t rp = line.find(')', after + 1);
              if (rp != std::string::npos) {
                tmp += inner;
                i = rp;
                continue;
              }
            } else if (after < line.size() && line[after] == '[') {
              size_t rr = line.find(']', after + 1);
              if (rr != std::string::npos) {
                tmp += inner;
                i = rr;
                continue;
              }
            }
          }
        }
        // Autolinks <http://...>.
        if (c == '<') {
          size_t gt = line.find('>', i + 1);
          if (gt != std::string::npos) {
            std::string inner = line.substr(i + 1, gt - i - 1);
            if (inner.rfind("http://", 0) == 0 || inner.rfind("https://", 0) == 0 ||
                inner.find('@') != std::string::npos) {
              i = gt;
              continue;
            }
          }
        }
        if (c == '*' || c == '`') continue;  // emphasis/code markers
        if (c == '_') {
          // Emphasis underscores only; identifiers like snake_case keep
          // interior underscores.
          bool prev_word = i > 0 && text::is_ascii_alnum(line[i - 1]);
          bool next_word =
              i + 1 < line.size() && text::is_ascii_alnum(line[i + 1]);
          if (!(prev_word && next_word)) continue;
        }
        tmp.push_back(c);
      }
      line = tmp;
    }
  emit:
    if (!first) joined << '\n';
    joined << line;
    first = false;
  }
  return trim(joined.str());
}

Document extract_text(std::string_view raw, SourceType source,
                      std::string id) {
  Document doc;
  doc.id = std::move(id);
  doc.source = source;
  if (looks_binary(raw)) return doc;
  std::string textual = text::sanitize_utf8(raw);
  switch (source) {
    case SourceType::html:
      doc.text = strip_html(textual);
      break;
    case SourceType::markdown:
      doc.text = strip_markdown(textual);
      break;
    case SourceType::plain_text:
    case SourceType::structured_records:
      doc.text = std::move(textual);
      break;
  }
  return doc;
}

std::string to_string(SourceType s) {
  switch (s) {
    case SourceType::plain_text: return "plain_text";
    case SourceType::html: return "html";
    case SourceType::markdown: return "markdown";
    case SourceType::structured_records: return "structured_records";
  }
  return "plain_text";
}

SourceType source_from_string(const std::string& s) {
  if (s == "plain_text") return SourceType::plain_text;
  if (s == "html") return SourceType::html;
  if (s == "markdown") return SourceType::markdown;
  if (s == "structured_records") return SourceType::structured_records;
  throw emkit::InputError("unknown document source: " + s);
}

}  // namespace emkit::corpus
