#include "alphacc/vocab.hpp"

#include <algorithm>
#include <map>

#include "alphacc/hash.hpp"
#include "alphacc/msa.hpp"

namespace alphacc {

namespace {
constexpr const char* kUnkToken = "<unk>";
}

Vocabulary::Vocabulary() : texts_{kPadToken, kUnkToken}, counts_{0, 0} {
  ids_.emplace(kPadToken, kPad);
  ids_.emplace(kUnkToken, kUnk);
}

Vocabulary Vocabulary::build(const std::vector<const FunctionStore*>& stores, std::size_t min_count) {
  std::unordered_map<std::string, std::uint64_t> freq;
  for (const FunctionStore* store : stores) {
    for (const auto& [id, fn] : *store) {
      for (const Token& t : fn.tokens) ++freq[t.text];
    }
  }
  std::vector<std::pair<std::string, std::uint64_t>> ranked;
  for (auto& [text, count] : freq) {
    if (count >= min_count && text != kPadToken && text != kUnkToken) ranked.emplace_back(text, count);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  Vocabulary v;
  for (auto& [text, count] : ranked) {
    v.ids_.emplace(text, static_cast<std::int32_t>(v.texts_.size()));
    v.texts_.push_back(std::move(text));
    v.counts_.push_back(count);
  }
  return v;
}

Vocabulary Vocabulary::from_texts(std::vector<std::string> texts) {
  Vocabulary v;
  v.texts_ = std::move(texts);
  v.ids_.clear();
  v.counts_.assign(v.texts_.size(), 0);
  for (std::size_t i = 0; i < v.texts_.size(); ++i) v.ids_.emplace(v.texts_[i], static_cast<std::int32_t>(i));
  return v;
}

std::int32_t Vocabulary::id(std::string_view text) const {
  const auto it = ids_.find(std::string(text));
  return it == ids_.end() ? kUnk : it->second;
}

std::uint64_t Vocabulary::digest() const {
  Fnv1a h;
  for (const auto& t : texts_) h.str(t);
  return h.digest();
}

}  // namespace alphacc
