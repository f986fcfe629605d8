#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "alphacc/extract.hpp"
#include "alphacc/token.hpp"

namespace alphacc {

/// One indexed function: its tokens plus the file context around it.
struct StoredFunction {
  std::string id;
  std::string file_path;
  std::string code;
  std::size_t start_line = 0;
  std::size_t end_line = 0;
  std::vector<Token> tokens;
  std::vector<Token> context_before;
  std::vector<Token> context_after;
};

struct SkipRecord {
  std::string path;
  std::string reason;
};

/// Functions keyed by id, iterated in ascending id order.
class FunctionStore {
 public:
  FunctionStore() = default;
  explicit FunctionStore(Language lang) : language_(lang) {}

  Language language() const { return language_; }
  std::size_t size() const { return functions_.size(); }
  bool empty() const { return functions_.empty(); }

  /// Throws DataError on a duplicate id or an empty token sequence.
  void add(StoredFunction fn);

  bool contains(const std::string& id) const { return functions_.contains(id); }
  const StoredFunction& at(const std::string& id) const;
  const StoredFunction* find(const std::string& id) const;

  auto begin() const { return functions_.begin(); }
  auto end() const { return functions_.end(); }

  /// Stable digest over ids, token texts/types and contexts.
  std::uint64_t digest() const;

 private:
  Language language_ = Language::JavaLike;
  std::map<std::string, StoredFunction> functions_;
};

struct IngestResult {
  FunctionStore store;
  std::vector<SkipRecord> skipped;
};

/// Tokenizes one function, keeping the extracted file context.
StoredFunction make_stored_function(const SourceFunction& fn);

/// Ingests either a directory tree (".java" for java, ".c"/".h" for c) or a
/// JSON-lines file of {"id","language","code","file_path","start_line","end_line"}.
/// Files that fail to lex or extract are skipped and reported. Throws
/// DataError when nothing could be extracted.
IngestResult ingest(const std::filesystem::path& source, Language lang,
                    std::size_t context_tokens = kDefaultContextTokens);

}  // namespace alphacc
