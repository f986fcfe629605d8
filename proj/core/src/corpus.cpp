#include "alphacc/corpus.hpp"

#include <algorithm>

#include "alphacc/error.hpp"
#include "alphacc/hash.hpp"
#include "alphacc/lexer.hpp"
#include "jsonl.hpp"

namespace alphacc {

namespace fs = std::filesystem;

void FunctionStore::add(StoredFunction fn) {
  if (fn.tokens.empty()) throw DataError("function '" + fn.id + "' has no tokens");
  const std::string id = fn.id;
  if (!functions_.emplace(id, std::move(fn)).second) throw DataError("duplicate function id '" + id + "'");
}

const StoredFunction& FunctionStore::at(const std::string& id) const {
  const auto it = functions_.find(id);
  if (it == functions_.end()) throw DataError("unknown function id '" + id + "'");
  return it->second;
}

const StoredFunction* FunctionStore::find(const std::string& id) const {
  const auto it = functions_.find(id);
  return it == functions_.end() ? nullptr : &it->second;
}

std::uint64_t FunctionStore::digest() const {
  Fnv1a h;
  h.str(language_name(language_));
  auto tokens = [&h](const std::vector<Token>& toks) {
    h.value(static_cast<std::uint64_t>(toks.size()));
    for (const Token& t : toks) h.str(t.text).value(static_cast<std::uint8_t>(t.type));
  };
  for (const auto& [id, fn] : functions_) {
    h.str(id);
    tokens(fn.tokens);
    tokens(fn.context_before);
    tokens(fn.context_after);
  }
  return h.digest();
}

StoredFunction make_stored_function(const SourceFunction& fn) {
  StoredFunction out;
  out.id = fn.id;
  out.file_path = fn.file_path;
  out.code = fn.text;
  out.start_line = fn.start_line;
  out.end_line = fn.end_line;
  out.tokens = tokenize(fn.text, fn.language).tokens;
  out.context_before = fn.context_before;
  out.context_after = fn.context_after;
  return out;
}

namespace {

bool matches_language(const fs::path& p, Language lang) {
  const std::string ext = p.extension().string();
  if (lang == Language::JavaLike) return ext == ".java";
  return ext == ".c" || ext == ".h";
}

void ingest_directory(const fs::path& root, Language lang, std::size_t context_tokens, IngestResult& result) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && matches_language(entry.path(), lang)) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    const std::string rel = fs::relative(file, root).generic_string();
    try {
      const std::string text = detail::read_file(file);
      for (const SourceFunction& fn : extract_functions(text, lang, rel, context_tokens)) {
        result.store.add(make_stored_function(fn));
      }
    } catch (const LexError& e) {
      result.skipped.push_back({rel, e.what()});
    } catch (const ExtractError& e) {
      result.skipped.push_back({rel, e.what()});
    }
  }
}

void ingest_jsonl(const fs::path& path, Language lang, IngestResult& result) {
  detail::for_each_jsonl(path, [&](std::size_t line_no, const detail::Json& obj) {
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("code")) {
      result.skipped.push_back({where, "missing 'id' or 'code'"});
      return;
    }
    if (obj.contains("language")) {
      const auto declared = parse_language(obj["language"].get<std::string>());
      if (!declared || *declared != lang) {
        result.skipped.push_back({where, "language mismatch"});
        return;
      }
    }
    StoredFunction fn;
    fn.id = obj["id"].get<std::string>();
    fn.code = obj["code"].get<std::string>();
    fn.file_path = obj.value("file_path", std::string());
    fn.start_line = obj.value("start_line", std::size_t{0});
    fn.end_line = obj.value("end_line", std::size_t{0});
    try {
      fn.tokens = tokenize(fn.code, lang).tokens;
    } catch (const LexError& e) {
      result.skipped.push_back({where, e.what()});
      return;
    }
    if (fn.tokens.empty()) {
      result.skipped.push_back({where, "no tokens"});
      return;
    }
    result.store.add(std::move(fn));
  });
}

}  // namespace

IngestResult ingest(const fs::path& source, Language lang, std::size_t context_tokens) {
  IngestResult result{FunctionStore(lang), {}};
  if (fs::is_directory(source)) {
    ingest_directory(source, lang, context_tokens, result);
  } else if (fs::is_regular_file(source)) {
    ingest_jsonl(source, lang, result);
  } else {
    throw DataError("corpus path does not exist: " + source.string());
  }
  if (result.store.empty()) throw DataError("no extractable functions in " + source.string());
  return result;
}

}  // namespace alphacc
