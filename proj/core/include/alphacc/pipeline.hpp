#pragma once

// Glue between the data side (stores, index, vocabulary) and the model:
// cached MSA inputs per function and batched pair scoring.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "alphacc/dataset.hpp"
#include "alphacc/enhancer.hpp"
#include "alphacc/model.hpp"
#include "alphacc/msa.hpp"
#include "alphacc/ngram_index.hpp"
#include "alphacc/vocab.hpp"

namespace alphacc {

/// MSA inputs built once per function id for a fixed (corpus, index, vocab, R, L).
/// Ids must be unique across every store passed to `get`.
class MsaCache {
 public:
  MsaCache(const FunctionStore& corpus, const NGramIndex& index, const Vocabulary& vocab, std::size_t depth,
           std::size_t length);

  std::size_t depth() const { return depth_; }
  std::size_t length() const { return length_; }
  std::uint64_t index_digest() const { return index_digest_; }

  CodeMSA build(const StoredFunction& fn) const;
  /// Thread-safe; returned references stay valid for the cache's lifetime.
  const MsaInput& get(const StoredFunction& fn);
  /// Builds every function referenced by `pairs`, using up to `threads` workers.
  void prepare(const FunctionStore& functions, const std::vector<ClonePair>& pairs, unsigned threads = 1);
  std::size_t size() const;

 private:
  const FunctionStore& corpus_;
  const NGramIndex& index_;
  const Vocabulary& vocab_;
  std::size_t depth_;
  std::size_t length_;
  std::uint64_t index_digest_;
  mutable std::mutex mutex_;
  std::map<std::string, MsaInput> inputs_;
};

/// Raw measure value of every pair. Each function is encoded once.
std::vector<double> score_pairs(const ModelParams<float>& params, const SimilarityConfig& similarity,
                                MsaCache& cache, const FunctionStore& functions,
                                const std::vector<ClonePair>& pairs, unsigned threads = 1);

}  // namespace alphacc
