#include "alphacc/extract.hpp"

#include <algorithm>
#include <set>

#include "alphacc/lexer.hpp"

namespace alphacc {

namespace {

std::optional<std::size_t> matching(const std::vector<Token>& toks, std::size_t open, std::string_view l,
                                    std::string_view r) {
  int depth = 0;
  for (std::size_t i = open; i < toks.size(); ++i) {
    if (toks[i].text == l) {
      ++depth;
    } else if (toks[i].text == r) {
      if (--depth == 0) return i;
    }
  }
  return std::nullopt;
}

// Index of the `{` that opens a body for a header whose parameter list closes
// at `close`, if one follows.
std::optional<std::size_t> body_open(const std::vector<Token>& toks, std::size_t close, Language lang) {
  std::size_t j = close + 1;
  if (lang == Language::JavaLike && j < toks.size() && toks[j].text == "throws") {
    ++j;
    while (j < toks.size()) {
      const Token& t = toks[j];
      const bool type_part = t.type == TokenType::Identifier || t.text == "." || t.text == "," ||
                             t.text == "<" || t.text == ">" || t.text == ">>" || t.text == "?";
      if (!type_part) break;
      ++j;
    }
  }
  if (j < toks.size() && toks[j].text == "{") return j;
  return std::nullopt;
}

}  // namespace

std::vector<SourceFunction> extract_functions(std::string_view file_text, Language lang, std::string_view file_path,
                                              std::size_t context_tokens) {
  const std::vector<Token> toks = tokenize(file_text, lang).tokens;

  long depth = 0;
  for (const Token& t : toks) {
    if (t.text == "{") ++depth;
    if (t.text == "}" && --depth < 0) {
      throw ExtractError("unbalanced braces: stray '}' at line " + std::to_string(t.line));
    }
  }
  if (depth != 0) throw ExtractError("unbalanced braces: " + std::to_string(depth) + " unclosed '{'");

  std::set<std::size_t> directive_lines;
  if (lang == Language::CLike) {
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const bool first_on_line = i == 0 || toks[i - 1].line < toks[i].line;
      if (first_on_line && toks[i].text.front() == '#') directive_lines.insert(toks[i].line);
    }
  }

  std::vector<SourceFunction> out;
  std::size_t i = 0;
  while (i + 1 < toks.size()) {
    const Token& name = toks[i];
    const bool candidate = name.type == TokenType::Identifier && toks[i + 1].text == "(" &&
                           !(i > 0 && toks[i - 1].text == "new") && !directive_lines.contains(name.line);
    if (!candidate) {
      ++i;
      continue;
    }
    const auto close = matching(toks, i + 1, "(", ")");
    const auto open = close ? body_open(toks, *close, lang) : std::nullopt;
    if (!open) {
      ++i;
      continue;
    }
    const std::size_t end = *matching(toks, *open, "{", "}");

    std::size_t start = i;
    while (start > 0) {
      const Token& prev = toks[start - 1];
      if (prev.text == ";" || prev.text == "{" || prev.text == "}") break;
      if (directive_lines.contains(prev.line)) break;
      --start;
    }

    SourceFunction fn;
    fn.id = std::string(file_path) + "#" + std::to_string(out.size());
    fn.language = lang;
    fn.file_path = std::string(file_path);
    fn.text = std::string(file_text.substr(toks[start].offset, toks[end].end() - toks[start].offset));
    fn.start_line = toks[start].line;
    fn.end_line = toks[end].line;
    const std::size_t before_begin = start > context_tokens ? start - context_tokens : 0;
    fn.context_before.assign(toks.begin() + static_cast<std::ptrdiff_t>(before_begin),
                             toks.begin() + static_cast<std::ptrdiff_t>(start));
    const std::size_t after_end = std::min(toks.size(), end + 1 + context_tokens);
    fn.context_after.assign(toks.begin() + static_cast<std::ptrdiff_t>(end + 1),
                            toks.begin() + static_cast<std::ptrdiff_t>(after_end));
    out.push_back(std::move(fn));
    i = end + 1;
  }
  return out;
}

}  // namespace alphacc
