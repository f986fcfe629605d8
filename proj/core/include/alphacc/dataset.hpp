#pragma once

// Labeled clone pairs over a function store.
//
// On disk a dataset is a directory holding functions.jsonl (the ingest JSONL
// schema) and one pair file per split: train.jsonl, validation.jsonl,
// test.jsonl, each line {"id1","id2","label":-1|1,"clone_type":"T1"...}.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphacc/corpus.hpp"

namespace alphacc {

enum class CloneType : std::uint8_t { T1, T2, ST3, MT3, T4 };
inline constexpr std::size_t kCloneTypeCount = 5;

std::string_view clone_type_name(CloneType t);
std::optional<CloneType> parse_clone_type(std::string_view name);

enum class Split : std::uint8_t { Train, Validation, Test };

std::string_view split_name(Split s);
std::optional<Split> parse_split(std::string_view name);

struct ClonePair {
  std::string id1;
  std::string id2;
  int label = 1;  // +1 clone, -1 not a clone
  std::optional<CloneType> clone_type;

  bool operator==(const ClonePair&) const = default;
};

struct ClonePairDataset {
  FunctionStore functions;
  std::vector<ClonePair> pairs;
  Split split = Split::Train;

  std::size_t positives() const;
  std::size_t negatives() const;
  std::uint64_t digest() const;
};

/// Throws DataError naming the pair on a dangling id, a bad label or a
/// repeated unordered pair.
void validate_pairs(const FunctionStore& functions, const std::vector<ClonePair>& pairs);

/// Pairs without a "label" get label 0 when `require_label` is false.
std::vector<ClonePair> load_pairs(const std::filesystem::path& path, bool require_label = true);

/// Loads functions.jsonl plus the pair file of `split`.
ClonePairDataset load_dataset(const std::filesystem::path& dir, Split split, Language lang);

void write_functions(const std::filesystem::path& path, const FunctionStore& store);
void write_pairs(const std::filesystem::path& path, const std::vector<ClonePair>& pairs);

}  // namespace alphacc
