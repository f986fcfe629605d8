#include "alphacc/pipeline.hpp"

#include <set>

#include "alphacc/error.hpp"
#include "alphacc/scorer.hpp"
#include "parallel.hpp"

namespace alphacc {

MsaCache::MsaCache(const FunctionStore& corpus, const NGramIndex& index, const Vocabulary& vocab, std::size_t depth,
                   std::size_t length)
    : corpus_(corpus), index_(index), vocab_(vocab), depth_(depth), length_(length), index_digest_(index.digest()) {
  if (depth == 0 || length == 0) throw ConfigError("MSA depth and length must be >= 1");
}

CodeMSA MsaCache::build(const StoredFunction& fn) const { return build_msa(fn, corpus_, index_, depth_, length_); }

const MsaInput& MsaCache::get(const StoredFunction& fn) {
  {
    std::lock_guard lock(mutex_);
    if (const auto it = inputs_.find(fn.id); it != inputs_.end()) return it->second;
  }
  MsaInput input = make_msa_input(build(fn), vocab_);
  std::lock_guard lock(mutex_);
  return inputs_.try_emplace(fn.id, std::move(input)).first->second;
}

void MsaCache::prepare(const FunctionStore& functions, const std::vector<ClonePair>& pairs, unsigned threads) {
  std::set<std::string> ids;
  for (const auto& p : pairs) {
    ids.insert(p.id1);
    ids.insert(p.id2);
  }
  const std::vector<std::string> list(ids.begin(), ids.end());
  detail::parallel_for(list.size(), threads, [&](std::size_t i, unsigned) { get(functions.at(list[i])); });
}

std::size_t MsaCache::size() const {
  std::lock_guard lock(mutex_);
  return inputs_.size();
}

std::vector<double> score_pairs(const ModelParams<float>& params, const SimilarityConfig& similarity,
                                MsaCache& cache, const FunctionStore& functions,
                                const std::vector<ClonePair>& pairs, unsigned threads) {
  std::map<std::string, std::size_t> slot;
  std::vector<std::string> ids;
  for (const auto& p : pairs) {
    for (const auto* id : {&p.id1, &p.id2}) {
      if (slot.emplace(*id, ids.size()).second) ids.push_back(*id);
    }
  }
  std::vector<PooledFragment<float>> pooled(ids.size());
  detail::parallel_for(ids.size(), threads, [&](std::size_t i, unsigned) {
    pooled[i] = encode<float>(params, cache.get(functions.at(ids[i])));
  });
  std::vector<double> scores(pairs.size());
  detail::parallel_for(pairs.size(), threads, [&](std::size_t i, unsigned) {
    const auto& a = pooled[slot.at(pairs[i].id1)];
    const auto& b = pooled[slot.at(pairs[i].id2)];
    scores[i] = score_fragments<float>(similarity, a, b).value;
  });
  return scores;
}

}  // namespace alphacc
