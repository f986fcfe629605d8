#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alphacc/corpus.hpp"

namespace alphacc {

/// Dense token ids. 0 is PAD and 1 is UNK; corpus tokens start at 2 in
/// descending frequency, ties broken by text.
class Vocabulary {
 public:
  static constexpr std::int32_t kPad = 0;
  static constexpr std::int32_t kUnk = 1;

  Vocabulary();

  /// Counts the function tokens of every store, keeping texts seen at least `min_count` times.
  static Vocabulary build(const std::vector<const FunctionStore*>& stores, std::size_t min_count = 1);
  static Vocabulary build(const FunctionStore& store, std::size_t min_count = 1) { return build({&store}, min_count); }
  static Vocabulary from_texts(std::vector<std::string> texts_in_id_order);

  std::size_t size() const { return texts_.size(); }
  /// PAD text maps to kPad; anything unknown maps to kUnk.
  std::int32_t id(std::string_view text) const;
  bool contains(std::string_view text) const { return ids_.contains(std::string(text)); }
  const std::string& text(std::int32_t id) const { return texts_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& texts() const { return texts_; }
  std::uint64_t frequency(std::int32_t id) const { return id < static_cast<std::int32_t>(counts_.size()) ? counts_[id] : 0; }
  std::uint64_t digest() const;

  bool operator==(const Vocabulary& other) const { return texts_ == other.texts_; }

 private:
  std::vector<std::string> texts_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, std::int32_t> ids_;
};

}  // namespace alphacc
